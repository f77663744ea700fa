#include "sturmia/cli.hpp"

#include "sturmia/acceptance.hpp"
#include "sturmia/factorization.hpp"
#include "sturmia/rauzy.hpp"
#include "sturmia/repetition.hpp"
#include "sturmia/torsion.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace sturmia {

std::string to_string(OutputFormat f) {
    switch (f) {
        case OutputFormat::text: return "text";
        case OutputFormat::json: return "json";
        case OutputFormat::csv: return "csv";
        case OutputFormat::dot: return "dot";
    }
    return "?";
}

OutputFormat parse_format(std::string_view s) {
    if (s == "text") return OutputFormat::text;
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    if (s == "dot") return OutputFormat::dot;
    throw DomainError("unknown format '" + std::string(s) + "'");
}

nlohmann::json RunConfig::to_json() const {
    nlohmann::json j = {{"command", command}, {"slope", slope}, {"depth", depth}, {"intercept", intercept}, {"verify", verify}};
    j["format"] = format ? nlohmann::json(to_string(*format)) : nlohmann::json(nullptr);
    return j;
}

RunConfig RunConfig::from_json(const nlohmann::json& j) {
    RunConfig c;
    c.command = j.at("command").get<std::string>();
    c.slope = j.at("slope").get<std::string>();
    c.depth = j.at("depth").get<std::size_t>();
    c.intercept = j.at("intercept").get<std::string>();
    c.verify = j.at("verify").get<bool>();
    if (!j.at("format").is_null()) c.format = parse_format(j.at("format").get<std::string>());
    return c;
}

std::size_t default_depth() {
    const char* env = std::getenv("STURMIA_DEPTH");
    if (!env || !*env) return 24;
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (*end || v == 0) return 24;
    return v;
}

namespace {

BigInt parse_bigint(std::string_view s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos)
        throw DomainError("expected a non-negative decimal integer, got '" + std::string(s) + "'");
    return BigInt(std::string(s));
}

std::vector<std::uint64_t> parse_list(std::string_view s) {
    std::vector<std::uint64_t> out;
    std::string item;
    std::istringstream is{std::string(s)};
    while (std::getline(is, item, ',')) out.push_back(to_u64(parse_bigint(item)));
    return out;
}

}  // namespace

AlphaNumber parse_intercept(std::string_view spec, const ContinuantTable& t, std::size_t depth) {
    if (spec == "zero") return AlphaNumber::zero(t, depth);
    if (spec == "sigma0") return AlphaNumber::sigma0(t, depth);
    if (spec == "sigma1") return AlphaNumber::sigma1(t, depth);
    if (spec.substr(0, 2) == "b:") {
        auto b = parse_list(spec.substr(2));
        if (b.size() > depth) throw DomainError("intercept has more digits than the depth " + std::to_string(depth));
        b.resize(depth, 0);
        return AlphaNumber(t, OstrowskiDigits(std::move(b)));
    }
    return AlphaNumber::from_integer(parse_bigint(spec), t, depth);
}

nlohmann::json digits_json(const OstrowskiDigits& d) { return d.b; }

nlohmann::json alpha_json(const AlphaNumber& rho) {
    return {{"slope", rho.table().slope().str()}, {"depth", rho.depth()}, {"digits", digits_json(rho.digits())}};
}

namespace {

struct Usage : Error {
    using Error::Error;
};

// Shared state the subcommand callbacks fill in.
struct Args {
    std::string slope = "[0;1*]";
    std::size_t depth = 0;
    std::string format;
    std::string intercept = "0";
    std::string n_value, digits, word, coeffs, dot_file, only;
    std::size_t len = 0, m = 0, m_max = 0, low = 0, k_max = 64, length = 0;
    std::optional<std::size_t> torsion_n;
    std::string shift = "0", by = "1";
    unsigned modulus = 2;
    bool oracle = false, duality = false, verbose = false;
    std::uint64_t seed = kAcceptanceSeed;
};

OutputFormat format_or(const Args& a, OutputFormat fallback, std::initializer_list<OutputFormat> allowed) {
    OutputFormat f = a.format.empty() ? fallback : parse_format(a.format);
    for (OutputFormat x : allowed)
        if (x == f) return f;
    throw Usage("format " + to_string(f) + " is not available for this command");
}

void emit(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

std::size_t depth_of(const Args& a) { return a.depth ? a.depth : default_depth(); }

int cmd_word(const Args& a, std::ostream& out) {
    Slope s = Slope::parse(a.slope);
    BigInt k = parse_bigint(a.shift);
    ContinuantTable t = table_exceeding(s, k + a.len + 2);
    Word w = k == 0 ? characteristic_prefix(t, BigInt(a.len)) : shifted_characteristic_prefix(t, k, BigInt(a.len));
    if (format_or(a, OutputFormat::text, {OutputFormat::text, OutputFormat::json}) == OutputFormat::json)
        emit(out, {{"slope", s.str()}, {"length", a.len}, {"shift", k.str()}, {"word", w}});
    else
        out << w << "\n";
    return 0;
}

nlohmann::json number_json(const OstrowskiDigits& d, const ContinuantTable& t) {
    nlohmann::json sup = support(d);
    return {{"value", decode(d, t).str()}, {"digits", digits_json(d)}, {"support", sup}, {"big_endian", big_endian_string(d)}};
}

int cmd_ostrowski(const std::string& op, const Args& a, std::ostream& out) {
    Slope s = Slope::parse(a.slope);
    const std::size_t D = depth_of(a);
    ContinuantTable t(s, D + 2);
    nlohmann::json j = {{"slope", s.str()}, {"depth", D}, {"operation", op}};
    OstrowskiDigits d;
    if (op == "encode") {
        d = encode(parse_bigint(a.n_value), t, D);
    } else if (op == "decode") {
        std::string_view spec = a.digits;
        if (spec.substr(0, 2) == "b:") spec.remove_prefix(2);
        auto b = parse_list(spec);
        ValidationReport rep = validate(b, t);
        if (!rep.valid) {
            const Violation& v = rep.digit_rule ? *rep.digit_rule : *rep.partial_sum;
            throw DomainError("invalid digits: " + v.message);
        }
        d = OstrowskiDigits(std::move(b));
    } else {
        RelaxedCoefficients r{a.low, parse_list(a.coeffs)};
        j["relaxed_value"] = relaxed_value(r, t).str();
        d = normalize(r, t);
    }
    j.update(number_json(d, t));
    if (format_or(a, OutputFormat::json, {OutputFormat::text, OutputFormat::json}) == OutputFormat::json)
        emit(out, j);
    else
        out << j["value"].get<std::string>() << " " << big_endian_string(d) << "\n";
    return 0;
}

int cmd_intercept(const std::string& op, const Args& a, std::ostream& out) {
    Slope s = Slope::parse(a.slope);
    const std::size_t D = depth_of(a);
    ContinuantTable t(s, D + 2);
    nlohmann::json j = {{"operation", op}};
    if (op == "from-word") {
        if (!is_binary(a.word)) throw DomainError("word must be over {0,1}");
        std::size_t depth = std::min(determined_depth(t, a.word.size()), D);
        j["intercept"] = alpha_json(intercept_from_prefix(a.word, t, depth));
    } else {
        AlphaNumber rho = parse_intercept(a.intercept, t, D);
        j["input"] = alpha_json(rho);
        if (op == "shift") {
            j["intercept"] = alpha_json(add_integer(rho, parse_bigint(a.by)));
        } else if (op == "complement") {
            ComplementReport cr = complement_report(rho);
            j["intercept"] = alpha_json(cr.value);
            j["exact_from"] = cr.exact_from;
            j["top"] = cr.top;
        } else {
            ClassReport c = classify(rho);
            j["verdict"] = to_string(c.verdict);
            j["witness"] = c.witness ? nlohmann::json(*c.witness) : nlohmann::json(nullptr);
            j["window"] = c.window;
        }
    }
    if (format_or(a, OutputFormat::json, {OutputFormat::text, OutputFormat::json}) == OutputFormat::json) {
        emit(out, j);
    } else if (j.contains("verdict")) {
        out << j["verdict"].get<std::string>() << "\n";
    } else {
        OstrowskiDigits d(j["intercept"]["digits"].get<std::vector<std::uint64_t>>());
        out << big_endian_string(d) << "\n";
    }
    return 0;
}

int cmd_rauzy(const Args& a, std::ostream& out) {
    Slope s = Slope::parse(a.slope);
    if (a.m == 0) throw Usage("-m must be at least 1");
    RauzyGraph g = build_graph(s, a.m);
    SpecialArrows sp = special_arrows(g);
    if (!a.dot_file.empty()) {
        std::ofstream f(a.dot_file);
        if (!f) throw DomainError("cannot write " + a.dot_file);
        f << to_dot(g);
    }
    OutputFormat f = format_or(a, OutputFormat::json, {OutputFormat::json, OutputFormat::dot, OutputFormat::text});
    if (f == OutputFormat::dot) {
        out << to_dot(g);
        return 0;
    }
    std::size_t turns = count_turns_shift(s, 0, a.m);
    std::size_t other_turns = count_turns_shift(s, 0, a.m, Cycle::other);
    nlohmann::json j = {
        {"slope", s.str()},
        {"m", a.m},
        {"interval", {{"n", g.pos.n}, {"l", g.pos.l}, {"r", g.pos.r.str()}}},
        {"vertices", g.vertices},
        {"left_special", g.vertices[g.left_special]},
        {"right_special", g.vertices[g.right_special]},
        {"referent_cycle_length", g.referent_cycle.size()},
        {"other_cycle_length", g.other_cycle.size()},
        {"common_path_length", g.common_path.size()},
        {"referent_arrow", g.edges[sp.referent].label},
        {"other_arrow", g.edges[sp.other].label},
        {"arrow_prediction_holds", sp.prediction_holds},
        {"turns", turns},
        {"expected_turns", g.a_next - g.pos.l},
        {"other_cycle_turns", other_turns},
    };
    if (f == OutputFormat::json)
        emit(out, j);
    else
        out << "cycles " << g.referent_cycle.size() << " " << g.other_cycle.size() << ", turns " << turns << "\n";
    return 0;
}

int cmd_repetition(const Args& a, std::ostream& out) {
    Slope s = Slope::parse(a.slope);
    const std::size_t D = depth_of(a);
    ContinuantTable t(s, D + 2);
    AlphaNumber rho = parse_intercept(a.intercept, t, D);
    if (a.m_max == 0) throw Usage("--m-max must be at least 1");
    IntervalPosition top = interval_locate(BigInt(a.m_max), t);
    if (top.n + 2 > D) throw DomainError("--m-max " + std::to_string(a.m_max) + " needs depth " + std::to_string(top.n + 2));
    std::vector<std::optional<std::size_t>> direct;
    if (a.oracle) direct = repetition_table(sturmian_prefix(rho, 2 * a.m_max + 4), a.m_max);
    OutputFormat f = format_or(a, OutputFormat::csv, {OutputFormat::csv, OutputFormat::json});
    nlohmann::json rows = nlohmann::json::array();
    if (f == OutputFormat::csv) out << "m,r_closed,r_direct,case_tag\n";
    int status = 0;
    for (std::size_t m = 1; m <= a.m_max; ++m) {
        ClosedForm cf = repetition_closed_form(rho, BigInt(m));
        std::string closed = cf.matched() ? cf.amended_value().str() : "";
        std::string tag = cf.matched() ? cf.tags() : "none";
        if (cf.matched() && cf.value() != cf.amended_value()) tag += " printed=" + cf.value().str();
        std::string dir;
        if (a.oracle) {
            dir = direct[m] ? std::to_string(*direct[m]) : "undecided";
            if (dir != closed) status = 1;
        }
        if (f == OutputFormat::csv)
            out << m << "," << closed << "," << dir << "," << tag << "\n";
        else
            rows.push_back({{"m", m}, {"r_closed", closed}, {"r_direct", dir}, {"case_tag", tag}});
    }
    if (f == OutputFormat::json) emit(out, {{"slope", s.str()}, {"intercept", alpha_json(rho)}, {"rows", rows}});
    return status;
}

int cmd_factorize(const Args& a, std::ostream& out) {
    Slope s = Slope::parse(a.slope);
    const std::size_t D = depth_of(a);
    ContinuantTable t(s, D + 2);
    AlphaNumber rho = parse_intercept(a.intercept, t, D);
    FactorizationReport rep = classify_factorization(rho);
    nlohmann::json j = {{"intercept", alpha_json(rho)}, {"class", to_string(rep.cls.verdict)}, {"kind", to_string(rep.kind)}, {"note", rep.note}};
    j["offset"] = rep.k ? nlohmann::json(rep.k->str()) : nlohmann::json(nullptr);
    int status = 0;
    if (!rep.cls.zero_class()) {
        AlphaNumber bar = complement(rho);
        j["complement"] = alpha_json(bar);
        if (a.length) {
            Word x = sturmian_prefix(rho, a.length);
            j["prefix"] = x;
            if (a.duality) {
                DualityVerdict v = duality_check(rho, a.length);
                j["duality"] = {{"prefix_holds", v.prefix.holds}, {"two_sided_holds", v.two_sided_ok}, {"two_sided_bound", v.two_sided_bound}};
                if (!v.holds()) {
                    j["duality"]["witness_product"] = product_prefix(bar, a.length);
                    if (v.prefix.mismatch) j["duality"]["mismatch"] = *v.prefix.mismatch;
                    status = 1;
                }
            }
        }
    } else if (a.duality) {
        throw DomainError("duality needs a non-zero class");
    }
    format_or(a, OutputFormat::json, {OutputFormat::json});
    emit(out, j);
    return status;
}

int cmd_torsion(const Args& a, std::ostream& out) {
    Slope s = Slope::parse(a.slope);
    if (a.modulus < 2) throw Usage("-N must be at least 2");
    AutomatonLog log = automaton_states(s, a.modulus, std::max<std::size_t>(depth_of(a), 8));
    std::size_t n = a.torsion_n.value_or(log.n0);
    if (n < 1) throw Usage("--n must be at least 1");
    auto hit = torsion_search(s, a.modulus, n, a.k_max);
    nlohmann::json j = {{"slope", s.str()}, {"N", a.modulus}, {"n", n}, {"n0", log.n0}, {"k_max", a.k_max}};
    if (hit) {
        nlohmann::json trace = nlohmann::json::array();
        for (const ModState& st : hit->state_trace) trace.push_back({st[0], st[1]});
        nlohmann::json sup = hit->support;
        j.update({{"k", hit->k}, {"quotient", hit->quotient.str()}, {"quotient_digits", digits_json(hit->quotient_digits)},
                  {"support", sup}, {"state_trace", trace}});
    } else {
        j.update({{"k", nullptr}, {"quotient", nullptr}, {"quotient_digits", nullptr}, {"support", nullptr}, {"state_trace", nullptr}});
    }
    if (format_or(a, OutputFormat::json, {OutputFormat::json, OutputFormat::text}) == OutputFormat::json)
        emit(out, j);
    else
        out << (hit ? "k=" + std::to_string(hit->k) : std::string("not found")) << "\n";
    return 0;
}

int cmd_verify(const Args& a, std::ostream& out, std::ostream& err) {
    AcceptanceOptions opts;
    opts.seed = a.seed;
    if (!a.only.empty())
        for (std::uint64_t id : parse_list(a.only)) opts.only.insert(static_cast<int>(id));
    std::ostringstream sink;
    auto results = run_acceptance(opts, a.verbose ? err : static_cast<std::ostream&>(sink));
    OutputFormat f = format_or(a, OutputFormat::text, {OutputFormat::text, OutputFormat::json});
    int failed = 0;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : results) {
        failed += !r.pass;
        if (f == OutputFormat::text)
            out << format_result(r) << "\n";
        else
            rows.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
    }
    if (f == OutputFormat::json)
        emit(out, {{"seed", opts.seed}, {"criteria", rows}, {"failed", failed}});
    else
        out << results.size() - failed << "/" << results.size() << " criteria pass (seed " << opts.seed << ")\n";
    return failed ? 1 : 0;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sturmian words, Ostrowski numeration and formal intercepts", "sturmia"};
    app.require_subcommand(1);
    app.fallthrough();
    Args a;
    app.add_option("--format", a.format, "text, json, csv or dot");

    auto slope_opt = [&](CLI::App* c) { c->add_option("--slope", a.slope, "slope such as \"[0;1,2,(3,1)*]\"")->capture_default_str(); };
    auto depth_opt = [&](CLI::App* c) { c->add_option("--depth", a.depth, "truncation depth (default STURMIA_DEPTH or 24)"); };

    auto* word = app.add_subcommand("word", "characteristic word prefixes");
    word->require_subcommand(1);
    auto* prefix = word->add_subcommand("prefix", "P_len(T^shift c_alpha)");
    slope_opt(prefix);
    prefix->add_option("--len", a.len, "prefix length")->required();
    prefix->add_option("--shift", a.shift, "shift k");

    auto* ostr = app.add_subcommand("ostrowski", "Ostrowski numeration");
    ostr->require_subcommand(1);
    std::vector<std::pair<std::string, CLI::App*>> ostr_ops;
    for (const char* op : {"encode", "decode", "normalize"}) {
        auto* c = ostr->add_subcommand(op);
        slope_opt(c);
        depth_opt(c);
        ostr_ops.emplace_back(op, c);
    }
    ostr_ops[0].second->add_option("--n", a.n_value, "integer to encode")->required();
    ostr_ops[1].second->add_option("--digits", a.digits, "little-endian digits b:0,1,0,1")->required();
    ostr_ops[2].second->add_option("--low", a.low, "index of the first coefficient")->required();
    ostr_ops[2].second->add_option("--coeffs", a.coeffs, "coefficients of q_low, q_low+1, ...")->required();

    auto* icpt = app.add_subcommand("intercept", "formal intercepts");
    icpt->require_subcommand(1);
    std::vector<std::pair<std::string, CLI::App*>> icpt_ops;
    for (const char* op : {"from-word", "shift", "complement", "classify"}) {
        auto* c = icpt->add_subcommand(op);
        slope_opt(c);
        depth_opt(c);
        if (std::string(op) == "from-word")
            c->add_option("--word", a.word, "prefix of a sturmian word of the slope")->required();
        else
            c->add_option("--intercept", a.intercept, "integer, b:digits, sigma0, sigma1 or zero")->required();
        icpt_ops.emplace_back(op, c);
    }
    icpt_ops[1].second->add_option("--by", a.by, "shift k");

    auto* rauzy = app.add_subcommand("rauzy", "Rauzy graph of degree m");
    slope_opt(rauzy);
    rauzy->add_option("-m", a.m, "degree")->required();
    rauzy->add_option("--dot", a.dot_file, "write DOT to this file");

    auto* rep = app.add_subcommand("repetition", "r(x, m) by the closed form");
    slope_opt(rep);
    depth_opt(rep);
    rep->add_option("--intercept", a.intercept, "integer, b:digits, sigma0, sigma1 or zero");
    rep->add_option("--m-max", a.m_max, "largest m")->required();
    rep->add_flag("--oracle", a.oracle, "also compute r from the word");

    auto* fact = app.add_subcommand("factorize", "product factorization of T^rho c_alpha");
    slope_opt(fact);
    depth_opt(fact);
    fact->add_option("--intercept", a.intercept, "integer, b:digits, sigma0, sigma1 or zero")->required();
    fact->add_option("--len", a.length, "prefix length to materialize");
    fact->add_flag("--verify-duality", a.duality, "compare with the product over the complement");

    auto* tors = app.add_subcommand("torsion", "smallest k with N | q_{n+k} - q_n and the support condition");
    slope_opt(tors);
    depth_opt(tors);
    tors->add_option("-N", a.modulus, "modulus")->required();
    tors->add_option("--n", a.torsion_n, "start index (default n0 from the automaton)");
    tors->add_option("--k-max", a.k_max, "largest k tried")->capture_default_str();

    auto* ver = app.add_subcommand("verify", "run the acceptance criteria");
    ver->add_option("--only", a.only, "comma-separated criterion numbers");
    ver->add_option("--seed", a.seed, "seed for the random corpora")->capture_default_str();
    ver->add_flag("--verbose", a.verbose, "diagnostics on stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "sturmia: " << e.what() << "\n";
        return 2;
    }

    try {
        if (word->parsed()) return cmd_word(a, out);
        for (auto& [op, c] : ostr_ops)
            if (c->parsed()) return cmd_ostrowski(op, a, out);
        for (auto& [op, c] : icpt_ops)
            if (c->parsed()) return cmd_intercept(op, a, out);
        if (rauzy->parsed()) return cmd_rauzy(a, out);
        if (rep->parsed()) return cmd_repetition(a, out);
        if (fact->parsed()) return cmd_factorize(a, out);
        if (tors->parsed()) return cmd_torsion(a, out);
        if (ver->parsed()) return cmd_verify(a, out, err);
    } catch (const Error& e) {
        err << "sturmia: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace sturmia
