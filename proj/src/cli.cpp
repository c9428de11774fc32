#include "rainbow/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <vector>

#include "rainbow/cache.hpp"
#include "rainbow/certificate.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/extremal.hpp"
#include "rainbow/graph6.hpp"
#include "rainbow/search.hpp"
#include "rainbow/verifier.hpp"

namespace rainbow::cli {

using nlohmann::json;

namespace {

// A flag value that does not follow its grammar; exit status 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Args {
    int n = 0;
    std::string pattern;
    std::string graph;
    std::string graph2;
    std::string colors;
    std::string colors2;
    std::string kind;
    std::vector<std::string> family;
    std::uint64_t budget = 0;
    int jobs = 1;
    int bound = kDefaultSmallGraphBound;
    std::string cache;
    std::string json_path;
    std::string certificate;
    std::string check;
    std::string colors_out;
    int r = 0;
    int t = 0;
    std::int64_t a_size = -1;
    std::int64_t b_threshold = -1;
    int n_min = 0;
    int n_max = 0;
    bool closure = false;
};

Graph graph_flag(const std::string& flag, const std::string& text)
{
    try {
        return decode_graph6(text);
    } catch (const ParseError& e) {
        throw UsageError(flag + ": not a graph6 string: " + e.what());
    }
}

Pattern pattern_flag(const std::string& text) { return Pattern(graph_flag("--pattern", text)); }

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
    if (!out) throw Error("write to " + path + " failed");
}

std::string edge_text(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

// ---- human table, generated from the JSON payload so both agree ----

std::string scalar_text(const json& v)
{
    if (v.is_null()) return "-";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

bool all_scalars(const json& arr)
{
    for (const auto& v : arr)
        if (v.is_structured()) return false;
    return true;
}

void print_rows(const json& rows, std::ostream& out, const std::string& indent)
{
    std::vector<std::string> cols;
    for (const auto& row : rows)
        for (const auto& [k, _] : row.items())
            if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    std::vector<std::size_t> width(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        width[c] = cols[c].size();
        for (const auto& row : rows)
            width[c] = std::max(width[c], scalar_text(row.value(cols[c], json())).size());
    }
    auto line = [&](auto cell) {
        out << indent;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            out << std::left << std::setw(static_cast<int>(width[c])) << cell(c);
            out << (c + 1 < cols.size() ? "  " : "");
        }
        out << '\n';
    };
    line([&](std::size_t c) { return cols[c]; });
    for (const auto& row : rows) line([&](std::size_t c) { return scalar_text(row.value(cols[c], json())); });
}

void print_table(const json& payload, std::ostream& out, const std::string& prefix = "")
{
    for (const auto& [key, v] : payload.items()) {
        const std::string name = prefix + key;
        if (v.is_object()) {
            print_table(v, out, name + ".");
        } else if (v.is_array() && all_scalars(v)) {
            out << name << ": ";
            if (v.empty()) out << "-";
            for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar_text(v[i]);
            out << '\n';
        } else if (v.is_array()) {
            out << name << ":\n";
            print_rows(v, out, "  ");
        } else {
            out << name << ": " << scalar_text(v) << '\n';
        }
    }
}

// ---- shared run plumbing ----

struct Context {
    const Args& args;
    std::ostream& out;
    std::ostream& err;
};

RunRecord cached_run(const Context& ctx, const std::string& command, const json& params,
                     const std::function<json()>& compute, bool* hit = nullptr)
{
    std::optional<ResultCache> cache;
    if (!ctx.args.cache.empty()) cache.emplace(ctx.args.cache);
    if (cache) {
        if (auto found = cache->lookup(command, params)) {
            if (hit) *hit = true;
            return *found;
        }
    }
    if (hit) *hit = false;
    const auto start = std::chrono::steady_clock::now();
    RunRecord record;
    record.command = command;
    record.params = params;
    record.result = compute();
    record.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    record.timestamp = utc_timestamp();
    if (cache) cache->append(record);
    return record;
}

int emit(const Context& ctx, const RunRecord& record, bool hit)
{
    print_table(record.result, ctx.out);
    ctx.out << "seconds: " << record.seconds << (hit ? " (cached)" : "") << '\n';
    if (!ctx.args.json_path.empty()) {
        json doc = record.to_json();
        doc["cached"] = hit;
        write_file(ctx.args.json_path, doc.dump(2) + "\n");
    }
    return 0;
}

RunRecord uncached_run(const std::string& command, const json& params, const std::function<json()>& compute)
{
    const auto start = std::chrono::steady_clock::now();
    RunRecord record;
    record.command = command;
    record.params = params;
    record.result = compute();
    record.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    record.timestamp = utc_timestamp();
    return record;
}

json f_json(const FValue& f)
{
    return {{"exact", f.exact}, {"value", f.exact ? json(f.value) : json()}, {"lower", f.lower}, {"upper", f.upper}};
}

json ex_json(const ExValue& ex) { return ex.no_free_graph ? json("no free graph") : json(ex.edges); }

// ---- commands ----

json analyze_payload(const Pattern& h, int bound)
{
    const PatternProfile p = analyze_pattern(h, {.bound = bound});
    json peeled = json::array();
    for (const Graph& g : p.peeled_family) peeled.push_back(encode_graph6(g));
    return {
        {"pattern", encode_graph6(h.graph())},
        {"vertices", h.order()},
        {"edges", h.size()},
        {"delta_prime", p.delta_prime},
        {"pendant_edge", p.has_pendant},
        {"peeled_family", peeled},
        {"f", f_json(p.f)},
        {"family_F_witness", p.family_f_witness ? json(edge_text(*p.family_f_witness)) : json()},
    };
}

json search_payload(const SearchResult& r, const Pattern& h, int bound)
{
    json witnesses = json::array();
    for (const Graph& g : r.witnesses) witnesses.push_back(encode_graph6(g));
    json levels = json::array();
    for (const LevelStats& s : r.levels)
        levels.push_back({{"edges", s.edges}, {"candidates", s.candidates}, {"accepted", s.accepted}});
    json out = {
        {"n", r.n},
        {"pattern", encode_graph6(h.graph())},
        {"exact", r.exact},
        {"value", r.exact ? json(r.value) : json()},
        {"lower", r.lower},
        {"upper", r.upper},
        {"witnesses", witnesses},
        {"levels", levels},
        {"candidates_checked", r.candidates_checked},
        {"note", "small-n data point; not evidence about asymptotic behavior"},
    };
    if (!r.exact) out["upper_source"] = r.upper_source;
    const BoundsReport b = paper_bounds(r.n, h, {.bound = bound});
    out["bound_lower"] = {{"value", b.lower}, {"source", b.lower_source}};
    out["bound_upper"] = {{"value", b.upper}, {"source", b.upper_source}};
    return out;
}

RunRecord rwsat_record(const Context& ctx, int n, const std::string& pattern_text, bool* hit)
{
    const Pattern h = pattern_flag(pattern_text);
    const json params = {{"n", n}, {"pattern", pattern_text}, {"budget", ctx.args.budget}, {"bound", ctx.args.bound}};
    return cached_run(ctx, "rwsat", params, [&] {
        const SearchResult r =
            exact_rwsat(n, h, {.budget = ctx.args.budget, .jobs = ctx.args.jobs, .bound = ctx.args.bound});
        return search_payload(r, h, ctx.args.bound);
    }, hit);
}

ColoredGraph colored_input(const Graph& g, const std::string& colors_path, std::uint64_t first = 0)
{
    if (colors_path.empty()) return ColoredGraph::rainbow(g, first);
    return parse_color_map(g, read_file(colors_path));
}

json construct_payload(const Context& ctx)
{
    const Args& a = ctx.args;
    const std::string& kind = a.kind;
    json payload = {{"kind", kind}};
    ColoredGraph built;
    std::int64_t contract = 0;
    std::string formula;
    std::optional<Pattern> closure_pattern;

    if (kind == "clique-isolated" || kind == "three-block" || kind == "family-f") {
        if (a.pattern.empty()) throw UsageError("--kind " + kind + " needs --pattern");
        const Pattern h = pattern_flag(a.pattern);
        payload["pattern"] = a.pattern;
        payload["n"] = a.n;
        closure_pattern = h;
        if (kind == "clique-isolated") {
            built = clique_plus_isolated(a.n, h);
            const std::int64_t f = f_of_h(h).require();
            contract = choose2(f + 1);
            formula = "C(f+1,2)";
        } else if (kind == "three-block") {
            built = three_block(a.n, h);
            const std::int64_t f = f_of_h(h).require();
            const std::int64_t dp = delta_prime(h);
            contract = dp * (a.n - f - dp) + choose2(f + dp);
            formula = "d'(n-f-d')+C(f+d',2)";
        } else {
            built = family_F_construction(a.n, h);
            const std::int64_t k = (a.n - h.order() - 1) / 2;
            contract = choose2(a.n - 2 * k) + 3 * k;
            formula = "C(t,2)+3k";
        }
    } else if (kind == "kr") {
        int r = a.r;
        if (r == 0 && !a.pattern.empty()) {
            if (!is_complete(pattern_flag(a.pattern).graph(), &r)) throw PreconditionError("--pattern is not a complete graph");
        }
        if (r == 0) throw UsageError("--kind kr needs --r or a complete --pattern");
        payload["n"] = a.n;
        payload["r"] = r;
        built = complete_graph_construction(a.n, r);
        contract = static_cast<std::int64_t>(r - 1) * (a.n - r) + choose2(r);
        formula = "(r-1)(n-r)+C(r,2)";
        closure_pattern = Pattern(complete_graph(r));
    } else if (kind == "c4") {
        payload["n"] = a.n;
        built = c4_construction(a.n);
        contract = a.n % 2 ? (a.n - 1) + (a.n - 1) / 2 : 6 + (a.n - 4) + (a.n - 4) / 2;
        formula = a.n % 2 ? "(n-1)+(n-1)/2" : "6+(n-4)+(n-4)/2";
        closure_pattern = Pattern(cycle_graph(4));
    } else {  // join
        if (a.graph.empty() || a.graph2.empty()) throw UsageError("--kind join needs --graph and --graph2");
        const ColoredGraph g1 = colored_input(graph_flag("--graph", a.graph), a.colors);
        std::uint64_t next = 0;
        for (ColorId c : g1.palette()) next = std::max(next, c.value + 1);
        const ColoredGraph g2 = colored_input(graph_flag("--graph2", a.graph2), a.colors2, next);
        int t = a.t;
        if (t == 0) {
            if (a.pattern.empty()) throw UsageError("--kind join needs --t or --pattern");
            t = default_join_t(pattern_flag(a.pattern));
        }
        const JoinBlueprint bp =
            subadditive_join(g1, g2, t, a.a_size >= 0 ? std::optional<std::int64_t>(a.a_size) : std::nullopt,
                             a.b_threshold >= 0 ? std::optional<std::int64_t>(a.b_threshold) : std::nullopt);
        built = bp.graph;
        contract = g1.graph().size() + g2.graph().size() +
                   static_cast<std::int64_t>(bp.x1.size() + bp.a1.size()) * static_cast<std::int64_t>(bp.x2.size() + bp.a2.size());
        formula = "|E1|+|E2|+|X1uA1||X2uA2|";
        payload["t"] = t;
        payload["a_size"] = bp.a_size;
        payload["b_threshold"] = bp.b_threshold;
        payload["blocks"] = {{"X1", bp.x1}, {"A1", bp.a1}, {"B1", bp.b1}, {"C1", bp.c1},
                             {"X2", bp.x2}, {"A2", bp.a2}, {"B2", bp.b2}, {"C2", bp.c2}};
        payload["block_sizes"] = bp.a_size == static_cast<std::int64_t>(std::pow(t, 6)) ? "default sizes" : "overridden sizes, outside the guarantee";
        if (!a.pattern.empty()) closure_pattern = pattern_flag(a.pattern);
    }

    payload["graph"] = encode_graph6(built.graph());
    payload["vertices"] = built.order();
    payload["edges"] = built.graph().size();
    payload["closed_form"] = contract;
    payload["formula"] = formula;
    payload["rainbow"] = built.is_rainbow();
    if (!a.colors_out.empty()) {
        write_file(a.colors_out, write_color_map(built));
        payload["colors"] = a.colors_out;
    }
    if (a.closure) {
        if (!closure_pattern) throw UsageError("--closure needs --pattern for this kind");
        payload["closure_pattern"] = encode_graph6(closure_pattern->graph());
        payload["saturated"] = greedy_closure(built, *closure_pattern, {.jobs = a.jobs}).saturated;
    }
    return payload;
}

json assignment_json(const Assignment& a)
{
    json pins = json::object();
    for (const auto& [step, color] : a.pins) pins[std::to_string(step)] = color.value;
    return pins;
}

json verify_payload(const Context& ctx)
{
    const Args& a = ctx.args;
    const Graph g = graph_flag("--graph", a.graph);
    const Pattern h = pattern_flag(a.pattern);
    const ColoredGraph colored = colored_input(g, a.colors);
    json payload = {{"graph", a.graph}, {"pattern", a.pattern}, {"non_edges", g.non_edges().size()}};
    if (!a.check.empty()) {
        const Certificate cert = parse_certificate(read_file(a.check));
        const VerifyResult r = verify_certificate(colored, h, cert);
        payload["certificate"] = a.check;
        payload["verdict"] = r.accepted ? "accepted" : "rejected";
        payload["failed_step"] = r.failed_step ? json(*r.failed_step) : json();
        payload["breaking_assignment"] = r.breaking ? assignment_json(*r.breaking) : json();
        return payload;
    }
    const ClosureResult r = greedy_closure(colored, h, {.jobs = a.jobs});
    payload["verdict"] = r.saturated ? "saturated" : "not saturated";
    payload["added"] = r.certificate.steps.size();
    if (r.saturated) {
        if (!a.certificate.empty()) {
            write_file(a.certificate, serialize_certificate(r.certificate));
            payload["certificate"] = a.certificate;
        } else {
            payload["certificate"] = json();
        }
    } else {
        json stuck = json::array();
        for (const Edge& e : r.final_state.current().graph().non_edges()) stuck.push_back(edge_text(e));
        payload["stuck_non_edges"] = stuck;
    }
    return payload;
}

json turan_payload(const Context& ctx)
{
    const Args& a = ctx.args;
    std::vector<Graph> family;
    if (!a.pattern.empty()) family = peeled_family(pattern_flag(a.pattern));
    for (const std::string& s : a.family) family.push_back(graph_flag("--family", s));
    if (family.empty()) throw UsageError("turan needs --family or --pattern");
    json members = json::array();
    for (const Graph& g : family) members.push_back(encode_graph6(g));
    const ExValue ex = turan_ex(a.n, family, {.bound = a.bound, .jobs = a.jobs});
    return {{"n", a.n}, {"family", members}, {"ex", ex_json(ex)}};
}

json bench_payload(const Context& ctx)
{
    const Args& a = ctx.args;
    const Pattern h = pattern_flag(a.pattern);
    if (a.n_min < 1 || a.n_max < a.n_min) throw UsageError("bench needs 1 <= --n-min <= --n-max");
    json rows = json::array();
    for (int n = a.n_min; n <= a.n_max; ++n) {
        bool hit = false;
        const RunRecord rec = rwsat_record(ctx, n, a.pattern, &hit);
        const json& r = rec.result;
        const std::int64_t lo = r.at("lower").get<std::int64_t>();
        const std::int64_t hi = r.at("upper").get<std::int64_t>();
        const std::int64_t plo = r.at("bound_lower").at("value").get<std::int64_t>();
        const std::int64_t phi = r.at("bound_upper").at("value").get<std::int64_t>();
        rows.push_back({
            {"n", n},
            {"bound_lower", plo},
            {"lower_source", r.at("bound_lower").at("source")},
            {"rwsat", r.at("exact").get<bool>() ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi)},
            {"bound_upper", phi},
            {"upper_source", r.at("bound_upper").at("source")},
            {"within", plo <= lo && hi <= phi},
        });
    }
    (void)h;
    return {{"pattern", a.pattern},
            {"rows", rows},
            {"note", "small-n data points; not evidence about asymptotic behavior"}};
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    Args a;
    CLI::App app{"rwlab: weak rainbow saturation experiments on small graphs", "rwlab"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* sub) {
        sub->add_option("--bound", a.bound, "small-graph bound for enumeration and Turán search")->capture_default_str();
        sub->add_option("--jobs", a.jobs, "worker threads (0 = all)")->capture_default_str();
        sub->add_option("--cache", a.cache, "JSONL result cache");
        sub->add_option("--json", a.json_path, "write the run record as JSON");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "pattern profile: delta', pendant edge, f(H), family witness");
    analyze->add_option("--pattern", a.pattern, "H as graph6")->required();
    common(analyze);

    CLI::App* construct = app.add_subcommand("construct", "build a weakly rainbow saturated construction");
    construct->add_option("--kind", a.kind, "construction")
        ->required()
        ->check(CLI::IsMember({"clique-isolated", "three-block", "kr", "family-f", "c4", "join"}));
    construct->add_option("--n", a.n, "number of vertices");
    construct->add_option("--pattern", a.pattern, "H as graph6");
    construct->add_option("--r", a.r, "clique order for --kind kr");
    construct->add_option("--graph", a.graph, "first join input (graph6)");
    construct->add_option("--graph2", a.graph2, "second join input (graph6)");
    construct->add_option("--colors", a.colors, "color map of --graph");
    construct->add_option("--colors2", a.colors2, "color map of --graph2");
    construct->add_option("--t", a.t, "join parameter t");
    construct->add_option("--a-size", a.a_size, "join independent-set size (default t^6)");
    construct->add_option("--b-threshold", a.b_threshold, "join B threshold (default t^5)");
    construct->add_option("--colors-out", a.colors_out, "write the sidecar color map");
    construct->add_flag("--closure", a.closure, "run the greedy closure on the result");
    common(construct);

    CLI::App* verify = app.add_subcommand("verify", "decide weak rainbow saturation, or check a certificate");
    verify->add_option("--graph", a.graph, "G as graph6")->required();
    verify->add_option("--pattern", a.pattern, "H as graph6")->required();
    verify->add_option("--colors", a.colors, "color map (default: rainbow by edge index)");
    verify->add_option("--certificate", a.certificate, "write the addition ordering here");
    verify->add_option("--check", a.check, "replay this certificate instead");
    common(verify);

    CLI::App* rwsat = app.add_subcommand("rwsat", "exact rwsat(n, H) by exhaustive search");
    rwsat->add_option("--n", a.n, "number of vertices")->required();
    rwsat->add_option("--pattern", a.pattern, "H as graph6")->required();
    rwsat->add_option("--budget", a.budget, "candidate graphs to check (0 = no limit)")->capture_default_str();
    common(rwsat);

    CLI::App* turan = app.add_subcommand("turan", "exact ex(n, family)");
    turan->add_option("--n", a.n, "number of vertices")->required();
    turan->add_option("--family", a.family, "forbidden graphs as graph6 (repeatable)");
    turan->add_option("--pattern", a.pattern, "use the peeled family of H");
    common(turan);

    CLI::App* fofh = app.add_subcommand("f-of-h", "f(H), or its interval when out of reach");
    fofh->add_option("--pattern", a.pattern, "H as graph6")->required();
    common(fofh);

    CLI::App* bench = app.add_subcommand("bench", "closed-form bounds against exact values over an n range");
    bench->add_option("--pattern", a.pattern, "H as graph6")->required();
    bench->add_option("--n-min", a.n_min, "first n")->required();
    bench->add_option("--n-max", a.n_max, "last n")->required();
    bench->add_option("--budget", a.budget, "candidate graphs per n (0 = no limit)")->capture_default_str();
    common(bench);

    std::vector<const char*> argv{"rwlab"};
    for (const std::string& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
        return 2;
    }

    const Context ctx{a, out, err};
    try {
        if (analyze->parsed()) {
            bool hit = false;
            const Pattern h = pattern_flag(a.pattern);
            const RunRecord rec = cached_run(ctx, "analyze", {{"pattern", a.pattern}, {"bound", a.bound}},
                                             [&] { return analyze_payload(h, a.bound); }, &hit);
            return emit(ctx, rec, hit);
        }
        if (construct->parsed()) {
            const json params = {{"kind", a.kind}, {"n", a.n}, {"pattern", a.pattern}};
            return emit(ctx, uncached_run("construct", params, [&] { return construct_payload(ctx); }), false);
        }
        if (verify->parsed()) {
            const json params = {{"graph", a.graph}, {"pattern", a.pattern}, {"colors", a.colors}, {"check", a.check}};
            const RunRecord rec = uncached_run("verify", params, [&] { return verify_payload(ctx); });
            emit(ctx, rec, false);
            return 0;
        }
        if (rwsat->parsed()) {
            bool hit = false;
            const RunRecord rec = rwsat_record(ctx, a.n, a.pattern, &hit);
            return emit(ctx, rec, hit);
        }
        if (turan->parsed()) {
            bool hit = false;
            const json params = {{"n", a.n}, {"family", a.family}, {"pattern", a.pattern}, {"bound", a.bound}};
            const RunRecord rec = cached_run(ctx, "turan", params, [&] { return turan_payload(ctx); }, &hit);
            return emit(ctx, rec, hit);
        }
        if (fofh->parsed()) {
            bool hit = false;
            const Pattern h = pattern_flag(a.pattern);
            const RunRecord rec = cached_run(ctx, "f-of-h", {{"pattern", a.pattern}, {"bound", a.bound}},
                                             [&] { return json{{"pattern", a.pattern}, {"f", f_json(f_of_h(h, {.bound = a.bound, .jobs = a.jobs}))}}; },
                                             &hit);
            return emit(ctx, rec, hit);
        }
        if (bench->parsed()) {
            const json params = {{"pattern", a.pattern}, {"n_min", a.n_min}, {"n_max", a.n_max}, {"budget", a.budget}};
            return emit(ctx, uncached_run("bench", params, [&] { return bench_payload(ctx); }), false);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

} // namespace rainbow::cli
