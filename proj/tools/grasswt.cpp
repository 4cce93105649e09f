#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "grasswt/cache.hpp"

using namespace grasswt;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Options {
    int l = 2;
    int m = 4;
    long long q = 2;
    std::string r_spec;
    uint64_t budget_subspaces = SearchLimits{}.subspace_budget;
    uint64_t budget_codewords = SearchLimits{}.codeword_budget;
    int workers = 1;
    std::string cache_dir;
    std::string format = "json";
    uint64_t seed = 0;
    std::string side = "auto";
    std::string out;
    std::string in;
};

const Field& field_for(long long q) {
    if (q < 2) fail(Errc::BadFormat, "q must be at least 2");
    int p = 2;
    while (q % p != 0) {
        ++p;
        if (p > q) fail(Errc::BadFormat, "q is not a prime power");
    }
    long long rest = q;
    int e = 0;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) fail(Errc::BadFormat, "q is not a prime power");
    return cached_field(p, e);
}

SearchSide side_for(const std::string& s) {
    if (s == "auto") return SearchSide::Auto;
    if (s == "primal") return SearchSide::Primal;
    if (s == "section") return SearchSide::Section;
    fail(Errc::BadFormat, "side must be auto, primal, or section");
}

std::pair<int, int> parse_range(const std::string& s) {
    auto piece = [&](const std::string& t) {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(t, &used);
        } catch (const std::exception&) {
            fail(Errc::BadFormat, "bad r value '" + s + "'");
        }
        if (used != t.size()) fail(Errc::BadFormat, "bad r value '" + s + "'");
        return v;
    };
    size_t pos = s.find("..");
    if (pos == std::string::npos) {
        int v = piece(s);
        return {v, v};
    }
    int lo = piece(s.substr(0, pos)), hi = piece(s.substr(pos + 2));
    if (lo > hi) fail(Errc::BadFormat, "empty r range '" + s + "'");
    return {lo, hi};
}

std::string resolve_cache_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("GRASSWT_CACHE"); env && *env) return env;
    return ".grasswt-cache";
}

SearchLimits limits_of(const Options& o) {
    SearchLimits lim;
    lim.subspace_budget = o.budget_subspaces;
    lim.codeword_budget = o.budget_codewords;
    lim.workers = o.workers;
    return lim;
}

ordered_json provenance(const std::string& command, ordered_json config, const Options& o) {
    config["workers"] = o.workers;
    ordered_json cfg{{"command", command}};
    for (auto& [key, val] : config.items()) cfg[key] = val;
    return ordered_json{{"version", kVersion},
                        {"config", cfg},
                        {"seed", o.seed},
                        {"budgets", ordered_json{{"subspaces", o.budget_subspaces},
                                                 {"codewords", o.budget_codewords}}}};
}

std::string subspace_count_text(int k, int r, int q) {
    std::ostringstream os;
    os << "[" << k << "," << r << "]_" << q << " = ";
    try {
        os << gaussian_binomial(k, r, q);
    } catch (const Error&) {
        os << "more than 2^64";
    }
    return os.str();
}

bool search_fits(int k, int r, int q, uint64_t budget) {
    try {
        return gaussian_binomial(k, std::min(r, k - r), q) <= budget;
    } catch (const Error&) {
        return false;
    }
}

// ---- rendering ---------------------------------------------------------

std::string csv_cell(const ordered_json& v) {
    std::string s;
    if (v.is_null())
        s = "";
    else if (v.is_string())
        s = v.get<std::string>();
    else
        s = v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string table_csv(const std::vector<std::string>& header,
                      const std::vector<std::vector<ordered_json>>& rows) {
    std::ostringstream os;
    for (size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << '\n';
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
        os << '\n';
    }
    return os.str();
}

std::string md_cell(const ordered_json& v) {
    std::string s;
    if (v.is_null())
        s = "";
    else if (v.is_string())
        s = v.get<std::string>();
    else
        s = v.dump();
    std::string out;
    for (char c : s) {
        if (c == '|') out += "\\|";
        else if (c == '\n') out += ' ';
        else out += c;
    }
    return out;
}

std::string table_md(const std::vector<std::string>& header,
                     const std::vector<std::vector<ordered_json>>& rows) {
    std::ostringstream os;
    os << '|';
    for (const std::string& h : header) os << ' ' << h << " |";
    os << "\n|";
    for (size_t i = 0; i < header.size(); ++i) os << " --- |";
    os << '\n';
    for (const auto& row : rows) {
        os << '|';
        for (const ordered_json& v : row) os << ' ' << md_cell(v) << " |";
        os << '\n';
    }
    return os.str();
}

void report_table(const ordered_json& rep, std::vector<std::string>& header,
                  std::vector<std::vector<ordered_json>>& rows) {
    std::string kind = rep.at("report").get<std::string>();
    auto get = [](const ordered_json& j, const char* key) {
        return j.contains(key) ? j[key] : ordered_json(nullptr);
    };
    if (kind == "verify") {
        header = {"name", "r", "expected", "computed", "status", "visited", "runtime_ms", "note"};
        for (const auto& c : rep.at("checks"))
            rows.push_back({get(c, "name"), get(c, "r"), get(c, "expected"), get(c, "computed"),
                            get(c, "status"), get(c, "visited"), get(c, "runtime_ms"),
                            get(c, "note")});
    } else if (kind == "weights") {
        header = {"r",       "computed", "closed_form", "bound_griesmer_wei",
                  "status",  "visited",  "runtime_ms",  "note"};
        for (const auto& c : rep.at("rows"))
            rows.push_back({get(c, "r"), get(c, "computed"), get(c, "closed_form"),
                            get(c, "bound_griesmer_wei"), get(c, "status"), get(c, "visited"),
                            get(c, "runtime_ms"), get(c, "note")});
    } else if (kind == "conjecture") {
        header = {"r",          "primal_value",   "dual_value",           "label",
                  "exact_primal", "exact_dual",   "witness_norm",         "witness_points",
                  "witness_decomposables",        "bound_griesmer_wei",
                  "bound_generalized",            "visited",              "runtime_ms", "note"};
        for (const auto& c : rep.at("rows"))
            rows.push_back({get(c, "r"), get(c, "primal_value"), get(c, "dual_value"),
                            get(c, "label"), get(c, "exact_primal"), get(c, "exact_dual"),
                            get(c, "witness_norm"), get(c, "witness_points"),
                            get(c, "witness_decomposables"), get(c, "bound_griesmer_wei"),
                            get(c, "bound_generalized"), get(c, "visited"),
                            get(c, "runtime_ms"), get(c, "note")});
    } else if (kind == "classify") {
        header = {"kind", "label", "dim", "all_decomposable"};
        const auto& w = rep.at("witness");
        rows.push_back({get(w, "kind"), get(w, "label"), get(w, "dim"),
                        get(rep, "all_decomposable")});
    } else if (kind == "cache-list") {
        header = {"file", "bytes", "key"};
        for (const auto& e : rep.at("entries"))
            rows.push_back({get(e, "file"), get(e, "bytes"), get(e, "key")});
    } else if (kind == "cache-purge") {
        header = {"removed"};
        rows.push_back({get(rep, "removed")});
    }
}

std::string render(const ordered_json& rep, const std::string& format) {
    if (format == "json") return rep.dump(2) + "\n";
    std::vector<std::string> header;
    std::vector<std::vector<ordered_json>> rows;
    report_table(rep, header, rows);
    if (format == "csv") return table_csv(header, rows);
    // markdown mirrors the JSON: provenance line, params line, table, summary
    std::ostringstream os;
    os << "# grasswt " << rep.at("report").get<std::string>() << "\n\n";
    if (rep.contains("provenance")) {
        const auto& p = rep["provenance"];
        os << "- provenance: version " << p["version"].get<std::string>() << ", seed "
           << p["seed"] << ", budgets " << p["budgets"].dump() << "\n";
        os << "- config: " << p["config"].dump() << "\n";
    }
    if (rep.contains("params")) os << "- params: " << rep["params"].dump() << "\n";
    if (rep.contains("note") && !rep["note"].get<std::string>().empty())
        os << "- note: " << rep["note"].get<std::string>() << "\n";
    os << "\n" << table_md(header, rows);
    if (rep.contains("summary")) os << "\nsummary: " << rep["summary"].dump() << "\n";
    if (rep.contains("spectrum")) os << "\nspectrum: " << rep["spectrum"].dump() << "\n";
    return os.str();
}

void emit(const ordered_json& rep, const Options& o) {
    std::string text = render(rep, o.format);
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) fail(Errc::BadFormat, "cannot write '" + o.out + "'");
    f << text;
}

// ---- subcommand bodies -------------------------------------------------

int exit_from_counts(int failed, int skipped) { return failed ? 1 : (skipped ? 2 : 0); }

FMatrix read_subspace_rows(const Field& F, std::istream& in, int cols) {
    std::vector<std::vector<uint8_t>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::vector<uint8_t> row;
        for (int j = 0; j < cols; ++j) row.push_back(parse_field_entry(F, ls).v);
        std::string extra;
        if (ls >> extra) fail(Errc::BadFormat, "row longer than the coordinate dimension");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) fail(Errc::BadFormat, "no subspace rows in the input");
    FMatrix M(F, int(rows.size()), cols);
    for (int i = 0; i < M.rows; ++i) std::copy(rows[i].begin(), rows[i].end(), M.row(i));
    return M;
}

int run_classify(const Options& o) {
    const Field& F = field_for(o.q);
    if (o.l < 1 || o.l > o.m) fail(Errc::WrongDegree, "need 1 <= l <= m");
    ExtAmbient A{&F, o.l, o.m};
    FMatrix rows;
    if (o.in.empty()) {
        rows = read_subspace_rows(F, std::cin, A.coord_dim());
    } else {
        std::ifstream f(o.in);
        if (!f) fail(Errc::BadFormat, "cannot read '" + o.in + "'");
        rows = read_subspace_rows(F, f, A.coord_dim());
    }
    Subspace S = Subspace::span_of(std::move(rows));
    EnumLimits lim;
    lim.element_budget = o.budget_codewords;
    CloseWitness w = classify(A, S, lim);

    ordered_json rep;
    rep["report"] = "classify";
    rep["provenance"] = provenance(
        "classify", ordered_json{{"l", o.l}, {"m", o.m}, {"q", o.q}, {"dim", S.dim()}}, o);
    rep["params"] = ordered_json{
        {"l", o.l}, {"m", o.m}, {"q", o.q}, {"dim", S.dim()}, {"coord_dim", A.coord_dim()}};
    rep["witness"] = close_witness_json(F, w);
    rep["all_decomposable"] = w.kind != CloseKind::NotDecomposable;
    emit(rep, o);
    return 0;
}

int run_build(const Options& o) {
    const Field& F = field_for(o.q);
    GrassmannCode C = build_code(F, o.l, o.m, limits_of(o));
    if (o.out.empty()) {
        write_generator(std::cout, C.code);
        return 0;
    }
    std::ofstream f(o.out);
    if (!f) fail(Errc::BadFormat, "cannot write '" + o.out + "'");
    write_generator(f, C.code);
    return 0;
}

int run_weights(const Options& o) {
    const Field& F = field_for(o.q);
    SearchLimits lim = limits_of(o);
    SearchSide side = side_for(o.side);
    ResultCache cache(resolve_cache_dir(o.cache_dir));

    std::ostringstream keyos;
    keyos << "report weights l=" << o.l << " m=" << o.m << " q=" << o.q << " r=" << o.r_spec
          << " side=" << o.side << " sb=" << o.budget_subspaces << " cb=" << o.budget_codewords
          << " workers=" << o.workers << " seed=" << o.seed << " v1";
    if (std::optional<ordered_json> hit = cache.load(keyos.str())) {
        emit(*hit, o);
        const auto& s = (*hit)["summary"];
        return exit_from_counts(s["failed"].get<int>(), s["skipped"].get<int>());
    }

    GrassmannCode C = build_code(F, o.l, o.m, lim);
    int rlo = 1, rhi = C.k();
    if (!o.r_spec.empty()) std::tie(rlo, rhi) = parse_range(o.r_spec);
    if (rlo < 0 || rhi > C.k()) fail(Errc::WrongDegree, "r range outside 0..k");

    ordered_json rep;
    rep["report"] = "weights";
    rep["provenance"] = provenance(
        "weights",
        ordered_json{
            {"l", o.l}, {"m", o.m}, {"q", o.q}, {"r_lo", rlo}, {"r_hi", rhi}, {"side", o.side}},
        o);
    rep["params"] = ordered_json{{"l", o.l},       {"m", o.m}, {"q", o.q},
                                 {"n", C.n()},     {"k", C.k()}, {"delta", C.delta()},
                                 {"mu", C.mu()}};
    rep["rows"] = ordered_json::array();
    int failed = 0, skipped = 0;
    for (int r = rlo; r <= rhi; ++r) {
        ordered_json row;
        row["r"] = r;
        std::optional<uint64_t> closed = hierarchy_closed_form(o.l, o.m, int(o.q), r);
        auto t0 = std::chrono::steady_clock::now();
        if (r == 0 || search_fits(C.k(), r, int(o.q), lim.subspace_budget)) {
            WeightWitness w =
                r == 0 ? WeightWitness{0, 0, FMatrix(F, 0, C.k()), 0}
                       : cached_higher_weight(&cache, C, r, lim, side);
            row["computed"] = w.norm;
            row["closed_form"] = closed ? ordered_json(*closed) : ordered_json(nullptr);
            bool ok = !closed || *closed == uint64_t(w.norm);
            row["status"] = ok ? (closed ? "pass" : "computed") : "fail";
            failed += !ok;
            if (w.messages.rows > 0) row["witness"] = matrix_json(w.messages);
            row["visited"] = w.visited;
        } else {
            row["computed"] = nullptr;
            row["closed_form"] = closed ? ordered_json(*closed) : ordered_json(nullptr);
            row["status"] = "skipped";
            row["note"] = subspace_count_text(C.k(), r, int(o.q)) +
                          " subspaces exceed the budget";
            row["visited"] = 0;
            ++skipped;
        }
        try {
            uint64_t d = 1;
            for (int i = 0; i < C.delta(); ++i) d *= uint64_t(o.q);
            row["bound_griesmer_wei"] = r == 0 ? 0 : griesmer_wei_bound(d, int(o.q), r);
        } catch (const Error&) {
            row["bound_griesmer_wei"] = nullptr;
        }
        row["runtime_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        rep["rows"].push_back(std::move(row));
    }
    if (o.l == 2) {
        try {
            ordered_json spec = ordered_json::array();
            for (const auto& [w, cnt] : spectrum_c2m(o.m, int(o.q)))
                spec.push_back(ordered_json::array({w, cnt}));
            rep["spectrum"] = spec;
        } catch (const Error&) {
            rep["spectrum"] = nullptr;
        }
    }
    rep["summary"] = ordered_json{{"passed", (rhi - rlo + 1) - failed - skipped},
                                  {"failed", failed},
                                  {"skipped", skipped}};
    cache.store(keyos.str(), rep);
    emit(rep, o);
    return exit_from_counts(failed, skipped);
}

int run_verify(const Options& o) {
    const Field& F = field_for(o.q);
    SearchLimits lim = limits_of(o);
    SearchSide side = side_for(o.side);
    ResultCache cache(resolve_cache_dir(o.cache_dir));

    std::ostringstream keyos;
    keyos << "report verify l=" << o.l << " m=" << o.m << " q=" << o.q << " side=" << o.side
          << " sb=" << o.budget_subspaces << " cb=" << o.budget_codewords
          << " workers=" << o.workers << " seed=" << o.seed << " v1";
    if (std::optional<ordered_json> hit = cache.load(keyos.str())) {
        emit(*hit, o);
        const auto& s = (*hit)["summary"];
        return exit_from_counts(s["failed"].get<int>(), s["skipped"].get<int>());
    }

    VerifyReport vr = verify_closed_forms(F, o.l, o.m, lim, side, &cache);
    ordered_json body = verify_json(vr);
    ordered_json rep;
    rep["report"] = "verify";
    rep["provenance"] = provenance(
        "verify", ordered_json{{"l", o.l}, {"m", o.m}, {"q", o.q}, {"side", o.side}}, o);
    for (auto& [key, val] : body.items()) rep[key] = val;
    cache.store(keyos.str(), rep);
    emit(rep, o);
    return exit_from_counts(vr.any_failed(), vr.any_skipped());
}

int run_conjecture(const Options& o) {
    const Field& F = field_for(o.q);
    SearchLimits lim = limits_of(o);
    ResultCache cache(resolve_cache_dir(o.cache_dir));

    std::ostringstream keyos;
    keyos << "report conjecture m=" << o.m << " q=" << o.q << " r=" << o.r_spec
          << " sb=" << o.budget_subspaces << " cb=" << o.budget_codewords
          << " workers=" << o.workers << " seed=" << o.seed << " v1";
    auto exit_of = [](const ordered_json& rep) {
        int refuted = rep["summary"]["refuted"].get<int>();
        bool partial = false;
        for (const auto& row : rep["rows"])
            partial = partial || row["label"].get<std::string>() == "UPPER-BOUND-MATCH" ||
                      row["label"].get<std::string>() == "UNRESOLVED";
        return refuted ? 1 : (partial ? 2 : 0);
    };
    if (std::optional<ordered_json> hit = cache.load(keyos.str())) {
        emit(*hit, o);
        return exit_of(*hit);
    }

    ConjectureReport cr;
    if (o.r_spec.empty()) {
        cr = conjecture_scan(F, o.m, lim, &cache);
    } else {
        auto [rlo, rhi] = parse_range(o.r_spec);
        cr = conjecture_scan(F, o.m, rlo, rhi, lim, &cache);
    }
    ordered_json body = conjecture_json(cr);
    ordered_json rep;
    rep["report"] = "conjecture";
    rep["provenance"] = provenance(
        "conjecture",
        ordered_json{{"m", o.m}, {"q", o.q}, {"r_lo", cr.r_lo}, {"r_hi", cr.r_hi}}, o);
    for (auto& [key, val] : body.items()) rep[key] = val;
    rep["note"] = cr.note;
    cache.store(keyos.str(), rep);
    emit(rep, o);
    return exit_of(rep);
}

int run_cache(const Options& o, bool purge) {
    ResultCache cache(resolve_cache_dir(o.cache_dir));
    ordered_json rep;
    if (purge) {
        rep["report"] = "cache-purge";
        rep["dir"] = cache.dir();
        rep["removed"] = cache.purge();
    } else {
        rep["report"] = "cache-list";
        rep["dir"] = cache.dir();
        rep["entries"] = ordered_json::array();
        for (const CacheEntry& e : cache.list())
            rep["entries"].push_back(
                ordered_json{{"file", e.file}, {"bytes", e.bytes}, {"key", e.key}});
    }
    emit(rep, o);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"exterior algebra, decomposable subspaces, and Grassmann code weights over F_q"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd, bool with_l = true) {
        if (with_l) cmd->add_option("--l", o.l, "degree of the wedge power");
        cmd->add_option("--m", o.m, "ambient dimension");
        cmd->add_option("--q", o.q, "field order, a prime power p^e");
        cmd->add_option("--budget-subspaces", o.budget_subspaces,
                        "largest subspace enumeration allowed per search");
        cmd->add_option("--budget-codewords", o.budget_codewords,
                        "largest codeword/element enumeration allowed");
        cmd->add_option("--workers", o.workers, "worker threads for searches")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--cache-dir", o.cache_dir,
                        "result cache directory (default: $GRASSWT_CACHE or ./.grasswt-cache)");
        cmd->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "md"}));
        cmd->add_option("--seed", o.seed, "seed recorded in report provenance");
        cmd->add_option("--out", o.out, "write the report to this file instead of stdout");
    };

    CLI::App* classify_cmd = app.add_subcommand(
        "classify", "decide whether a subspace of the wedge power is all-decomposable");
    add_common(classify_cmd);
    classify_cmd->add_option("--in", o.in, "subspace rows, one per line (default: stdin)");

    CLI::App* code_cmd = app.add_subcommand("code", "Grassmann code construction and weights");
    code_cmd->require_subcommand(1);
    CLI::App* build_cmd =
        code_cmd->add_subcommand("build", "write the generator matrix text format");
    add_common(build_cmd);
    CLI::App* weights_cmd =
        code_cmd->add_subcommand("weights", "weight hierarchy, spectrum, and bounds");
    add_common(weights_cmd);
    weights_cmd->add_option("--r", o.r_spec, "dimension or range, e.g. 3 or 1..5");
    weights_cmd->add_option("--side", o.side, "search side")
        ->check(CLI::IsMember({"auto", "primal", "section"}));

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "recompute every applicable closed-form weight statement");
    add_common(verify_cmd);
    verify_cmd->add_option("--side", o.side, "search side")
        ->check(CLI::IsMember({"auto", "primal", "section"}));

    CLI::App* conjecture_cmd =
        app.add_subcommand("conjecture", "scan the conjectured middle-range weight formulas");
    add_common(conjecture_cmd, false);
    conjecture_cmd->add_option("--r", o.r_spec, "dimension or range, e.g. 6..7");

    CLI::App* cache_cmd = app.add_subcommand("cache", "manage the result cache");
    cache_cmd->require_subcommand(1);
    CLI::App* cache_list = cache_cmd->add_subcommand("list", "list cached entries");
    add_common(cache_list);
    CLI::App* cache_purge = cache_cmd->add_subcommand("purge", "remove every cached entry");
    add_common(cache_purge);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 64;
    }

    try {
        if (*classify_cmd) return run_classify(o);
        if (*build_cmd) return run_build(o);
        if (*weights_cmd) return run_weights(o);
        if (*verify_cmd) return run_verify(o);
        if (*conjecture_cmd) return run_conjecture(o);
        if (*cache_list) return run_cache(o, false);
        if (*cache_purge) return run_cache(o, true);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        bool budget = e.code() == Errc::EnumerationBudgetExceeded ||
                      e.code() == Errc::SearchBudgetExceeded;
        return budget ? 2 : 64;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return 64;
}
