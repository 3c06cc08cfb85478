#include <galilei/genfun/generating_functions.hpp>
#include <galilei/genfun/structure.hpp>
#include <galilei/quiver/projective.hpp>
#include <galilei/quiver/quiver.hpp>
#include <galilei/report/report.hpp>
#include <galilei/report/series_cache.hpp>
#include <galilei/sl2/fin_dim.hpp>
#include <galilei/sl2/harish_chandra.hpp>
#include <galilei/symalg/invariants.hpp>
#include <galilei/verify/acceptance.hpp>
#include <galilei/young/lattice.hpp>
#include <galilei/young/psi.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>

using namespace galilei;
using report::Json;
using report::Report;

namespace {

struct Options {
    std::string format = "text";
    std::string out;
    bool cache = false;
};

std::string str(const Rational& r) { return r.get_str(); }

std::unique_ptr<report::SeriesCache> make_cache(const Options& o) {
    if (!o.cache) return nullptr;
    return std::make_unique<report::SeriesCache>(report::SeriesCache::default_dir());
}

exact::TruncatedSeries cached(const report::SeriesCache* cache, const std::string& key,
                              const std::function<exact::TruncatedSeries()>& compute) {
    return cache ? cache->get_or_compute(key, compute) : compute();
}

std::string series_key(const char* method, int k, int l, int N) {
    return std::string(method) + "/" + std::to_string(k) + "/" + std::to_string(l) + "/" + std::to_string(N);
}

Json series_table(const std::vector<std::pair<std::string, exact::TruncatedSeries>>& columns) {
    std::vector<std::string> header{"degree"};
    for (auto& [name, s] : columns) header.push_back(name);
    std::vector<std::vector<std::string>> rows;
    const int N = columns.front().second.truncation();
    for (int d = 0; d <= N; ++d) {
        std::vector<std::string> row{std::to_string(d)};
        for (auto& [name, s] : columns) row.push_back(str(s[d]));
        rows.push_back(std::move(row));
    }
    return report::table(std::move(header), rows);
}

// --- genfun ---------------------------------------------------------------

Report genfun_series(const Options& o, int k, int l, int N, const std::string& method) {
    Report r;
    r.command = "genfun series";
    r.params = {{"k", k}, {"l", l}, {"degree", N}, {"method", method}};
    auto cache = make_cache(o);
    std::vector<std::pair<std::string, exact::TruncatedSeries>> cols;
    const bool all = method == "all";
    if (all || method == "enum")
        cols.emplace_back("enum", cached(cache.get(), series_key("enum", k, l, N), [&] { return genfun::f_enum(k, l, N); }));
    if ((all && k >= 2) || method == "recur")
        cols.emplace_back("recur",
                          cached(cache.get(), series_key("recur", k, l, N), [&] { return genfun::f_recur(k, l, N); }));
    if ((all && genfun::has_closed_form(k, l)) || method == "closed") {
        const auto rf = genfun::f_closed(k, l);
        r.results["closed form"] = rf.to_string();
        cols.emplace_back("closed", exact::series_expand(rf, N));
    }
    r.results["series"] = series_table(cols);
    if (all)
        for (size_t i = 1; i < cols.size(); ++i)
            r.verdict(cols[0].first + " = " + cols[i].first, cols[0].second == cols[i].second);
    return r;
}

Report genfun_invariants(const Options&, int k, int N) {
    Report r;
    r.command = "genfun invariants";
    r.params = {{"k", k}, {"degree", N}};
    const auto series = genfun::invariant_series(k, N);
    r.results["invariant series"] = series.to_string();
    try {
        const auto st = genfun::detect_structure(series);
        r.results["generator degrees"] = st.generator_degrees;
        r.results["relation degree"] = st.relation_degree ? Json(*st.relation_degree) : Json(nullptr);
        r.results["polynomial algebra"] = st.is_polynomial_algebra();
        r.verdict("structure reproduces the series to degree " + std::to_string(N),
                  genfun::structure_series(st, N) == series);
    } catch (const genfun::StructureNotRecognized& e) {
        r.results["structure"] = e.what();
        r.verdict("structure recognized", false, e.what());
    }
    return r;
}

Report genfun_freeness(const Options&, int k, int l, int N) {
    Report r;
    r.command = "genfun freeness";
    r.params = {{"k", k}, {"l", l}, {"degree", N}};
    const auto fq = genfun::freeness_quotient(k, l, N);
    r.results["quotient"] = fq.quotient.to_string();
    r.results["first negative coefficient"] =
        fq.first_negative ? "degree " + std::to_string(*fq.first_negative) : "none up to degree " + std::to_string(N);
    r.results["non-negative to degree " + std::to_string(N)] = !fq.first_negative.has_value();
    return r;
}

// --- sl2 ------------------------------------------------------------------

Report sl2_sym(const Options&, int k, int n) {
    Report r;
    r.command = "sl2 sym";
    r.params = {{"k", k}, {"n", n}};
    const auto dec = sl2::sym_power_decompose(k, n);
    r.results["decomposition"] = sl2::to_string(dec);
    std::vector<std::vector<std::string>> rows;
    Integer total = 0;
    for (auto [l, m] : dec) {
        rows.push_back({"L(" + std::to_string(l) + ")", std::to_string(m)});
        total += Integer(static_cast<long>(m)) * (l + 1);
    }
    r.results["multiplicities"] = report::table({"simple", "multiplicity"}, rows);
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n + k), static_cast<unsigned long>(k));
    r.results["dimension"] = total.get_str();
    r.verdict("dimension = binomial(n+k, k)", total == binom, "binomial " + binom.get_str());
    return r;
}

Report sl2_q0(const Options&, std::optional<int> l, std::optional<int> table_max) {
    Report r;
    r.command = "sl2 q0";
    if (l) {
        r.params["l"] = *l;
        r.results["multiplicity of L(" + std::to_string(*l) + ") in Q(0)"] = sl2::q0_multiplicity(*l);
    }
    const int max = table_max.value_or(l ? 0 : 4);
    if (table_max || !l) {
        r.params["table"] = max;
        std::vector<std::vector<std::string>> rows;
        for (int k = 0; k <= max; ++k) rows.push_back({std::to_string(k), sl2::to_string(sl2::q00_degree_part(k))});
        r.results["graded parts of Q(0,0)"] = report::table({"degree", "part"}, rows);
    }
    return r;
}

Report sl2_tensor(const Options&, int k, const std::string& simple) {
    Report r;
    r.command = "sl2 tensor";
    const auto s = sl2::SimpleHC::parse(simple);
    r.params = {{"k", k}, {"simple", s.to_string()}};
    r.results["L(" + std::to_string(k) + ") x " + s.to_string()] = sl2::to_string(sl2::hc_tensor(k, s));
    return r;
}

// --- symalg ---------------------------------------------------------------

Report symalg_check_invariants(const Options&) {
    Report r;
    r.command = "symalg check-invariants";
    using namespace symalg;
    for (const auto& [name, inv] : {std::pair{"C2", build_C2()}, std::pair{"C3", build_C3()}}) {
        const auto& p = inv.element;
        Json entry;
        entry["element"] = p.to_string();
        entry["degree"] = p.degree();
        entry["weight"] = p.weight();
        entry["e.p"] = adjoint_action(Generator::e, p).to_string();
        entry["f.p"] = adjoint_action(Generator::f, p).to_string();
        r.results[name] = entry;
        r.verdict(std::string(name) + " is invariant", is_invariant(p));
        r.verdict(std::string(name) + " has degree " + std::to_string(inv.degree) + " and weight 0",
                  p.degree() == inv.degree && p.weight() == 0);
    }
    return r;
}

Report symalg_independence(const Options&, int k) {
    Report r;
    r.command = "symalg independence";
    r.params = {{"k", k}};
    const auto cert = symalg::independence_check(k);
    r.results["vectors"] = cert.vectors;
    r.results["monomials"] = cert.monomials;
    r.results["rank"] = cert.rank;
    r.verdict("ad_e^i(w_-4^i w_-2^(k-i)), i < k, are linearly independent", cert.independent);
    return r;
}

// --- young ----------------------------------------------------------------

Report young_matrix(const Options&, int n, bool emit) {
    Report r;
    r.command = "young matrix";
    r.params = {{"n", n}, {"emit", emit}};
    const auto m = young::path_matrix(n);
    std::vector<std::string> header{""};
    for (auto& c : m.columns) header.push_back(c.to_string());
    std::vector<std::vector<std::string>> rows;
    for (size_t i = 0; i < m.rows.size(); ++i) {
        std::vector<std::string> row{m.rows[i].to_string()};
        for (size_t j = 0; j < m.columns.size(); ++j) row.push_back(m.entries(i, j).to_string());
        rows.push_back(std::move(row));
    }
    r.results["size"] = std::to_string(m.rows.size()) + " x " + std::to_string(m.columns.size());
    if (emit || m.columns.size() <= 12) r.results["M_" + std::to_string(n)] = report::table(header, rows);
    r.results["rank at x=n"] = young::rank_at_value(m, Rational(n));
    return r;
}

Report young_rank(const Options&, int upto) {
    Report r;
    r.command = "young rank";
    r.params = {{"upto", upto}};
    std::vector<std::vector<std::string>> rows;
    for (int n = 1; n <= upto; ++n) {
        const size_t rank = young::rank_at(n);
        const bool ok = rank == static_cast<size_t>(n);
        rows.push_back({std::to_string(n), std::to_string(rank), ok ? "PASS" : "FAIL"});
        r.verdict("n=" + std::to_string(n) + " rank = n", ok);
    }
    r.results["ranks"] = report::table({"n", "rank", "rank = n"}, rows);
    return r;
}

Report young_det(const Options&, int upto) {
    Report r;
    r.command = "young det";
    r.params = {{"upto", upto}};
    std::vector<std::vector<std::string>> rows;
    for (int n = 2; n <= upto; ++n) {
        const auto f = young::verify_det_factorization(n);
        std::string factors;
        for (int root : f.roots) factors += "(x-" + std::to_string(root) + ")";
        rows.push_back({std::to_string(n), f.integer_factor.get_str(), factors.empty() ? "1" : factors,
                        f.nonzero_at_n ? "yes" : "no"});
        r.verdict("n=" + std::to_string(n) + " det N_n = integer * prod (x-i), i < n",
                  f.integer_factor_nonzero && f.splits && f.roots_below_n && f.nonzero_at_n);
    }
    r.results["determinants"] = report::table({"n", "integer factor", "linear factors", "nonzero at x=n"}, rows);
    return r;
}

// --- quiver ---------------------------------------------------------------

Report quiver_radical(const Options&, const std::string& top, int depth) {
    Report r;
    r.command = "quiver radical";
    const auto s = sl2::SimpleHC::parse(top);
    r.params = {{"top", s.to_string()}, {"depth", depth}};
    const auto f = quiver::radical_filtration(s, depth);
    r.results["projective"] = quiver::Projective{s}.to_string();
    r.results["block"] = quiver::block_of(s);
    Json layers = Json::array();
    for (const auto& layer : f.layers) layers.push_back(sl2::to_string(layer));
    r.results["layers"] = layers;
    r.results["filtration"] = quiver::to_string(f);
    return r;
}

Report quiver_decompose(const Options&, int k) {
    Report r;
    r.command = "quiver decompose-q";
    r.params = {{"k", k}};
    const auto printed = quiver::decompose_Q(k);
    const auto from_types = quiver::decompose_Q_from_g_types(k);
    r.results["Q(" + std::to_string(k) + ")"] = quiver::to_string(printed);
    r.verdict("case split agrees with [V : L(k)]", printed == from_types, quiver::to_string(from_types));
    return r;
}

Report quiver_blocks(const Options&, int max_index) {
    Report r;
    r.command = "quiver blocks";
    r.params = {{"max_index", max_index}};
    for (int b = 1; b <= 3; ++b) {
        const auto q = quiver::presentation(b, max_index);
        Json entry;
        Json vertices = Json::array();
        for (auto& v : q.vertices) vertices.push_back(v.to_string());
        std::vector<std::vector<std::string>> arrows;
        for (auto& a : q.arrows) arrows.push_back({a.name, a.source.to_string(), a.target.to_string()});
        entry["vertices"] = vertices;
        entry["arrows"] = report::table({"arrow", "source", "target"}, arrows);
        entry["relations"] = q.relation_strings();
        r.results["block " + std::to_string(b)] = entry;
    }
    return r;
}

// --- verify ---------------------------------------------------------------

Report verify_all(const Options&, bool quick) {
    Report r;
    r.command = "verify all";
    r.params = {{"quick", quick}};
    const auto scope = quick ? verify::Scope::quick() : verify::Scope::full();
    const auto results = verify::run_all(scope, true);
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : results) {
        rows.push_back({std::to_string(c.id), c.title, c.pass() ? "PASS" : "FAIL", std::to_string(c.checks.size()),
                        std::to_string(static_cast<long long>(c.wall_time_ms))});
        r.verdict("criterion " + std::to_string(c.id) + ": " + c.title, c.pass(), c.pass() ? "" : c.summary());
    }
    r.results["criteria"] = report::table({"id", "criterion", "result", "checks", "ms"}, rows);
    return r;
}

int emit(const Options& o, const Report& r) {
    const std::string text = o.format == "structured" ? r.to_json().dump(2) + "\n" : r.to_text();
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(o.out);
        if (!f) {
            std::cerr << "cannot write " << o.out << "\n";
            return 2;
        }
        f << text;
    }
    for (const auto& v : r.verdicts)
        if (!v.pass) std::cerr << "FAILED: " << v.claim << (v.detail.empty() ? "" : " (" + v.detail + ")") << "\n";
    return r.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations for symmetric powers of sl2-modules, Young-lattice path matrices and "
                 "Harish-Chandra block quivers"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
    app.add_option("--out", opt.out, "Write the report to FILE instead of stdout");
    app.add_flag("--cache", opt.cache, "Cache series on disk under $GALILEI_CACHE_DIR");

    std::function<Report()> action;
    auto on = [&](CLI::App* cmd, std::function<Report()> f) { cmd->callback([&action, f] { action = f; }); };

    int k = 0, l = 0, N = genfun::kDefaultDegree, n = 1, depth = 3, upto = 4, max_index = 16;
    std::string method = "all", simple, top;
    bool emit_matrix = false, quick = false;
    std::optional<int> q0_l, q0_table;

    auto* genfun_cmd = app.add_subcommand("genfun", "Generating functions F^(k)_l(q)")->require_subcommand(1);
    auto* series = genfun_cmd->add_subcommand("series", "Series table by enumeration, recursion and closed form");
    series->add_option("--k", k)->required()->check(CLI::Range(0, 40));
    series->add_option("--l", l)->required()->check(CLI::NonNegativeNumber);
    series->add_option("--degree", N)->capture_default_str()->check(CLI::Range(0, 400));
    series->add_option("--method", method)->check(CLI::IsMember({"enum", "recur", "closed", "all"}))->capture_default_str();
    on(series, [&] { return genfun_series(opt, k, l, N, method); });

    auto* invariants = genfun_cmd->add_subcommand("invariants", "Invariant Hilbert series and detected structure");
    invariants->add_option("--k", k)->required()->check(CLI::Range(0, 40));
    invariants->add_option("--degree", N)->capture_default_str()->check(CLI::Range(0, 400));
    on(invariants, [&] { return genfun_invariants(opt, k, N); });

    auto* freeness = genfun_cmd->add_subcommand("freeness", "Freeness quotient and its first negative coefficient");
    freeness->add_option("--k", k)->required()->check(CLI::Range(0, 40));
    freeness->add_option("--l", l)->required()->check(CLI::NonNegativeNumber);
    freeness->add_option("--degree", N)->capture_default_str()->check(CLI::Range(0, 400));
    on(freeness, [&] { return genfun_freeness(opt, k, l, N); });

    auto* sl2_cmd = app.add_subcommand("sl2", "sl2 and Harish-Chandra combinatorics")->require_subcommand(1);
    auto* sym = sl2_cmd->add_subcommand("sym", "Decompose Sym^n L(k)");
    sym->add_option("--k", k)->required()->check(CLI::Range(0, 40));
    sym->add_option("--n", n)->required()->check(CLI::Range(0, 200));
    on(sym, [&] { return sl2_sym(opt, k, n); });

    auto* q0 = sl2_cmd->add_subcommand("q0", "Multiplicities in Q(0) and its graded parts");
    q0->add_option("--l", q0_l)->check(CLI::NonNegativeNumber);
    q0->add_option("--table", q0_table, "Graded parts up to this degree")->check(CLI::Range(0, 60));
    on(q0, [&] { return sl2_q0(opt, q0_l, q0_table); });

    auto* tensor = sl2_cmd->add_subcommand("tensor", "L(k) tensor a simple Harish-Chandra module");
    tensor->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
    tensor->add_option("--simple", simple, "V'(0), V'(2) or V(n); Vp0, Vp2, Vn also accepted")->required();
    on(tensor, [&] { return sl2_tensor(opt, k, simple); });

    auto* symalg_cmd = app.add_subcommand("symalg", "Sym(L(4)) with the adjoint action")->require_subcommand(1);
    auto* check_inv = symalg_cmd->add_subcommand("check-invariants", "Verify C2 and C3");
    on(check_inv, [&] { return symalg_check_invariants(opt); });
    auto* indep = symalg_cmd->add_subcommand("independence", "Rank certificate for ad_e^i(w_-4^i w_-2^(k-i))");
    indep->add_option("--k", k)->required()->check(CLI::Range(1, 30));
    on(indep, [&] { return symalg_independence(opt, k); });

    auto* young_cmd = app.add_subcommand("young", "Labelled Young lattice with parts <= 4")->require_subcommand(1);
    auto* matrix = young_cmd->add_subcommand("matrix", "Path matrix M_n");
    matrix->add_option("--n", n)->required()->check(CLI::Range(1, 30));
    matrix->add_flag("--emit", emit_matrix, "Print the matrix even when it is wide");
    on(matrix, [&] { return young_matrix(opt, n, emit_matrix); });
    auto* rank = young_cmd->add_subcommand("rank", "Rank of M_n at x=n");
    rank->add_option("--upto", upto)->required()->check(CLI::Range(1, 30));
    on(rank, [&] { return young_rank(opt, upto); });
    auto* det = young_cmd->add_subcommand("det", "Determinant factorizations of N_n");
    det->add_option("--upto", upto)->required()->check(CLI::Range(2, 30));
    on(det, [&] { return young_det(opt, upto); });

    auto* quiver_cmd = app.add_subcommand("quiver", "Block quivers and projectives")->require_subcommand(1);
    auto* radical = quiver_cmd->add_subcommand("radical", "Radical filtration of an indecomposable projective");
    radical->add_option("--top", top, "V'(0), V'(2) or V(n); Vp0, Vp2, Vn also accepted")->required();
    radical->add_option("--depth", depth)->capture_default_str()->check(CLI::Range(0, 200));
    on(radical, [&] { return quiver_radical(opt, top, depth); });
    auto* decompose = quiver_cmd->add_subcommand("decompose-q", "Decompose Q(k) into projectives");
    decompose->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
    on(decompose, [&] { return quiver_decompose(opt, k); });
    auto* blocks = quiver_cmd->add_subcommand("blocks", "List the three block quivers with relations");
    blocks->add_option("--max-index", max_index, "Cut the infinite quivers at this index")
        ->capture_default_str()
        ->check(CLI::Range(4, 400));
    on(blocks, [&] { return quiver_blocks(opt, max_index); });

    auto* verify_cmd = app.add_subcommand("verify", "Acceptance suites")->require_subcommand(1);
    auto* all = verify_cmd->add_subcommand("all", "Run every acceptance criterion");
    all->add_flag("--quick", quick, "Smaller ranges");
    on(all, [&] { return verify_all(opt, quick); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    if (!action) {
        std::cerr << app.help();
        return 2;
    }
    try {
        const auto start = std::chrono::steady_clock::now();
        Report r = action();
        r.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return emit(opt, r);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
