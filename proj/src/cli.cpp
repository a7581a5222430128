#include "zsl/cli.hpp"

#include "zsl/atoms.hpp"
#include "zsl/error.hpp"
#include "zsl/invariants.hpp"
#include "zsl/lengths.hpp"
#include "zsl/parallel.hpp"
#include "zsl/structure.hpp"
#include "zsl/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <map>
#include <sstream>

namespace zsl {

namespace {

using nlohmann::json;

struct Config {
    std::string output = "text";
    int workers = 0;
    std::string cache_dir;
    bool no_cache = false;

    bool as_json() const { return output == "json"; }
    int worker_count() const { return workers > 0 ? workers : default_workers(); }
    std::filesystem::path cache() const
    {
        if (no_cache)
            return {};
        return cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cache_dir);
    }
};

std::vector<ElementId> parse_subset(const FiniteAbelianGroup& G, const std::string& text)
{
    if (text.empty())
        return all_elements(G);
    const Sequence S = parse_sequence(G, text);
    return S.support();
}

AtomSet load_atoms(const Config& cfg, const FiniteAbelianGroup& G, const std::vector<ElementId>& subset)
{
    const auto dir = cfg.cache();
    return dir.empty() ? enumerate_atoms(G, subset) : cached_atoms(dir, G, subset);
}

json lengths_json(const LengthSet& L) { return L.values(); }

std::string join(const std::vector<int>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return "{" + s + "}";
}

// ---------------------------------------------------------------------------

struct AtomsArgs {
    std::string group, subset;
    int min_length = 1, max_length = 0;
    bool count = false;
};

int cmd_atoms(const Config& cfg, const AtomsArgs& a, std::ostream& out)
{
    const auto G = parse_group_spec(a.group);
    const auto subset = parse_subset(G, a.subset);
    std::vector<Sequence> atoms;
    int D = 0;
    if (a.min_length <= 1 && a.max_length == 0) {
        auto set = load_atoms(cfg, G, subset);
        atoms = std::move(set.atoms);
        D = set.davenport;
    } else {
        AtomSearch s;
        s.subset = subset;
        s.min_length = a.min_length;
        s.max_length = a.max_length;
        for_each_atom(G, s, [&](const Sequence& U) {
            atoms.push_back(U);
            D = std::max(D, U.length());
            return true;
        });
        std::sort(atoms.begin(), atoms.end());
    }
    if (cfg.as_json()) {
        json j{{"group", G.spec()}, {"subset", render_subset(G, subset)}, {"count", atoms.size()},
               {"max_length", D}};
        if (!a.count) {
            auto& list = j["atoms"] = json::array();
            for (const auto& U : atoms)
                list.push_back(render(U));
        }
        out << j.dump(2) << "\n";
    } else {
        out << "group " << G.name() << ", " << atoms.size() << " atoms, max length " << D << "\n";
        if (!a.count)
            for (const auto& U : atoms)
                out << render(U) << "\n";
    }
    return exit_ok;
}

int cmd_davenport(const Config& cfg, const std::string& group, std::ostream& out)
{
    const auto G = parse_group_spec(group);
    const int D = load_atoms(cfg, G, all_elements(G)).davenport;
    const int ds = d_star(G);
    if (cfg.as_json())
        out << json{{"group", G.spec()}, {"davenport", D}, {"d_star", ds}, {"equal", D == ds}}.dump(2) << "\n";
    else
        out << "D(" << G.name() << ") = " << D << ", D* = " << ds << (D == ds ? ", equal" : ", different") << "\n";
    return exit_ok;
}

struct LengthsArgs {
    std::string group, sequence;
    bool factorizations = false, catenary = false;
    std::size_t cap = kDefaultFactorizationCap;
};

int cmd_lengths(const Config& cfg, const LengthsArgs& a, std::ostream& out)
{
    const auto G = parse_group_spec(a.group);
    const Sequence B = parse_sequence(G, a.sequence);
    const LengthSet L = length_set(B);
    std::vector<Factorization> zs;
    if (a.factorizations || a.catenary)
        zs = enumerate_factorizations(B, a.cap);
    if (cfg.as_json()) {
        json j{{"group", G.spec()}, {"sequence", render(B)}, {"lengths", lengths_json(L)}};
        if (a.factorizations) {
            auto& list = j["factorizations"] = json::array();
            for (const auto& z : zs) {
                auto atoms = json::array();
                for (const auto& U : z.atoms)
                    atoms.push_back(render(U));
                list.push_back(atoms);
            }
        }
        if (a.catenary)
            j["catenary_degree"] = catenary_degree(zs);
        out << j.dump(2) << "\n";
    } else {
        out << "L = " << to_string(L) << "\n";
        if (a.factorizations)
            for (const auto& z : zs) {
                out << "  [" << z.length() << "]";
                for (const auto& U : z.atoms)
                    out << " | " << render(U);
                out << "\n";
            }
        if (a.catenary)
            out << "c = " << catenary_degree(zs) << "\n";
    }
    return exit_ok;
}

struct PairsArgs {
    std::string group, subset, contains;
    int min_atom_length = 1;
    bool negatives_only = false;
};

int cmd_pairs(const Config& cfg, const PairsArgs& a, std::ostream& out)
{
    const auto G = parse_group_spec(a.group);
    const auto atoms = load_atoms(cfg, G, parse_subset(G, a.subset));
    std::optional<LengthSet> needle;
    if (!a.contains.empty())
        needle = parse_length_set(a.contains);
    PairFilter f;
    f.min_atom_length = a.min_atom_length;
    f.negatives_only = a.negatives_only;
    const auto results = pair_length_sets(atoms.atoms, f, cfg.worker_count());
    struct Row {
        std::size_t count = 0;
        std::size_t first = 0, second = 0;
    };
    std::map<LengthSet, Row> rows;
    for (const auto& r : results) {
        if (needle && !r.lengths.contains_all(*needle))
            continue;
        auto [it, fresh] = rows.try_emplace(r.lengths);
        if (fresh) {
            it->second.first = r.first;
            it->second.second = r.second;
        }
        ++it->second.count;
    }
    if (cfg.as_json()) {
        auto list = json::array();
        for (const auto& [L, row] : rows)
            list.push_back({{"lengths", lengths_json(L)},
                            {"pairs", row.count},
                            {"witness", {render(atoms.atoms[row.first]), render(atoms.atoms[row.second])}}});
        out << json{{"group", G.spec()}, {"results", list}}.dump(2) << "\n";
    } else {
        for (const auto& [L, row] : rows)
            out << to_string(L) << "  " << row.count << " pairs, e.g. " << render(atoms.atoms[row.first]) << " * "
                << render(atoms.atoms[row.second]) << "\n";
    }
    return exit_ok;
}

struct InvariantArgs {
    std::string name, group, subset;
    int bound = 12;
    int k = 0;
    std::size_t max_order = kSubsetSweepMaxOrder;
    RhoGuard rho;
};

int cmd_invariant(const Config& cfg, const InvariantArgs& a, std::ostream& out)
{
    const auto G = parse_group_spec(a.group);
    const auto subset = parse_subset(G, a.subset);
    InvariantReport r;
    r.invariant = a.name;
    r.group = G.spec();
    r.subset = render_subset(G, subset);
    if (a.name == "delta") {
        r.value = delta_bounded(G, subset, a.bound);
        r.bound = a.bound;
        r.search_space = "zero-sum sequences over the subset of length <= bound";
    } else if (a.name == "delta-star") {
        const auto res = delta_star_bounded(G, a.bound, a.max_order);
        r.subset = render_subset(G, all_elements(G));
        r.value = res.values;
        r.bound = a.bound;
        r.search_space = res.zero_conventions_agree ? "all subsets of G" : "all subsets of G (zero conventions differ)";
    } else if (a.name == "rho") {
        if (a.k > 0) {
            r.invariant = "rho_" + std::to_string(a.k);
            r.value = rho_k(load_atoms(cfg, G, subset).atoms, a.k, a.rho);
        } else {
            Rational best(1);
            for_each_zero_sum(G, subset, a.bound, [&](const Sequence& B) {
                const LengthSet L = length_set(B);
                if (L.min() > 0)
                    best = std::max(best, rho_of(L));
            });
            r.value = best;
            r.bound = a.bound;
            r.search_space = "zero-sum sequences over the subset of length <= bound";
        }
    } else if (a.name == "daleth") {
        const auto d = daleth(load_atoms(cfg, G, subset).atoms);
        r.value = d.value;
        r.search_space = "all pairs of atoms";
    } else if (a.name == "m") {
        const auto res = m_bounded(G, a.bound, a.max_order);
        r.subset = render_subset(G, all_elements(G));
        r.value = res.value;
        r.bound = a.bound;
        r.search_space = "LCN subsets of G";
    } else {
        throw Error(Errc::invalid_argument, "unknown invariant " + a.name);
    }
    if (cfg.as_json()) {
        out << r.to_json().dump(2) << "\n";
    } else {
        out << r.invariant << "(" << r.group << ") = ";
        std::visit(
            [&](const auto& v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, Rational>)
                    out << to_string(v);
                else if constexpr (std::is_same_v<T, int>)
                    out << v;
                else
                    out << join(v);
            },
            r.value);
        if (r.bound)
            out << "  (bounded, |B| <= " << *r.bound << ")";
        out << "\n";
    }
    return exit_ok;
}

int cmd_classify(const Config& cfg, const std::string& set, std::ostream& out)
{
    const LengthSet L = parse_length_set(set);
    const auto amps = amp_decompositions(L);
    if (cfg.as_json()) {
        auto list = json::array();
        for (const auto& d : amps)
            list.push_back(to_json(d));
        out << json{{"set", lengths_json(L)}, {"interval", is_interval(L)}, {"amp", list}}.dump(2) << "\n";
    } else {
        out << to_string(L) << (is_interval(L) ? ": interval\n" : "\n");
        for (const auto& d : amps) {
            std::vector<int> p = d.period;
            out << "AMP d=" << d.d << " period " << join(p) << " l=" << d.ell << "\n";
        }
    }
    return exit_ok;
}

int cmd_family(const Config& cfg, const std::string& name, const std::vector<std::string>& params, std::ostream& out)
{
    const auto sets = family(name, params);
    if (cfg.as_json()) {
        auto list = json::array();
        for (const auto& L : sets)
            list.push_back(lengths_json(L));
        out << json{{"family", name}, {"params", params}, {"sets", list}}.dump(2) << "\n";
    } else {
        for (const auto& L : sets)
            out << to_string(L) << "\n";
    }
    return exit_ok;
}

struct VerifyArgs {
    std::vector<std::string> checks;
    bool all = false, include_long = false, list = false;
};

int cmd_verify(const Config& cfg, const VerifyArgs& a, std::ostream& out)
{
    if (a.list) {
        if (cfg.as_json()) {
            auto list = json::array();
            for (const auto& c : list_checks())
                list.push_back({{"check_id", c.id},
                                {"reference", c.reference},
                                {"mode", to_string(c.mode)},
                                {"runtime", to_string(c.runtime)},
                                {"long_running", c.long_running},
                                {"summary", c.summary}});
            out << list.dump(2) << "\n";
        } else {
            for (const auto& c : list_checks())
                out << c.id << "  " << c.reference << "  " << to_string(c.mode) << "  " << to_string(c.runtime)
                    << (c.long_running ? " (opt-in)" : "") << "  " << c.summary << "\n";
        }
        return exit_ok;
    }
    std::vector<std::string> ids = a.checks;
    if (a.all || ids.empty())
        ids = default_check_ids(a.include_long);
    CheckOptions opts;
    opts.workers = cfg.worker_count();
    opts.cache_dir = cfg.cache();
    const auto reports = run_checks(ids, opts);
    if (cfg.as_json())
        out << to_json(reports).dump(2) << "\n";
    else
        out << render_table(reports);
    bool failed = false, skipped = false;
    for (const auto& r : reports) {
        failed = failed || r.status == CheckStatus::fail;
        skipped = skipped || r.status == CheckStatus::skipped;
    }
    return failed ? exit_check_failed : skipped ? exit_guard : exit_ok;
}

void report_error(const Config& cfg, std::ostream& err, const Error& e, const GuardError* guard)
{
    if (cfg.as_json()) {
        json j{{"code", errc_name(e.code())}, {"message", e.what()}};
        if (guard) {
            j["guard"] = guard->guard();
            if (!guard->override_flag().empty())
                j["override"] = guard->override_flag();
        }
        err << json{{"error", j}}.dump() << "\n";
    } else {
        err << "error: " << e.what() << "\n";
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"zero-sum sequences and sets of lengths over finite abelian groups", "zslab"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--output", cfg.output, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--workers", cfg.workers, "worker threads (default: ZSLAB_WORKERS or hardware)")
        ->check(CLI::PositiveNumber);
    app.add_option("--cache-dir", cfg.cache_dir, "atom cache directory");
    app.add_flag("--no-cache", cfg.no_cache, "do not read or write the atom cache");

    std::function<int()> action;

    AtomsArgs atoms_args;
    auto* atoms = app.add_subcommand("atoms", "list the atoms over a subset");
    atoms->add_option("--group", atoms_args.group, "invariant factors, e.g. 2,4")->required();
    atoms->add_option("--subset", atoms_args.subset, "elements, e.g. \"(0,1) (1,0)\"");
    atoms->add_option("--min-length", atoms_args.min_length)->check(CLI::PositiveNumber);
    atoms->add_option("--max-length", atoms_args.max_length)->check(CLI::NonNegativeNumber);
    atoms->add_flag("--count", atoms_args.count, "print only the count");
    atoms->callback([&] { action = [&] { return cmd_atoms(cfg, atoms_args, out); }; });

    std::string dav_group;
    auto* dav = app.add_subcommand("davenport", "Davenport constant and D*");
    dav->add_option("--group", dav_group)->required();
    dav->callback([&] { action = [&] { return cmd_davenport(cfg, dav_group, out); }; });

    LengthsArgs len_args;
    auto* len = app.add_subcommand("lengths", "set of lengths of a zero-sum sequence");
    len->add_option("--group", len_args.group)->required();
    len->add_option("--sequence", len_args.sequence, "e.g. \"(1)^4 (2)\"")->required();
    len->add_flag("--factorizations", len_args.factorizations);
    len->add_flag("--catenary", len_args.catenary);
    len->add_option("--max-factorizations", len_args.cap, "factorization enumeration cap");
    len->callback([&] { action = [&] { return cmd_lengths(cfg, len_args, out); }; });

    PairsArgs pair_args;
    auto* pairs = app.add_subcommand("pairs", "sets of lengths of products of two atoms");
    pairs->add_option("--group", pair_args.group)->required();
    pairs->add_option("--subset", pair_args.subset);
    pairs->add_option("--min-atom-length", pair_args.min_atom_length)->check(CLI::PositiveNumber);
    pairs->add_option("--contains", pair_args.contains, "keep sets containing this set, e.g. \"2,5\"");
    pairs->add_flag("--negatives-only", pair_args.negatives_only, "only pairs U(-U)");
    pairs->callback([&] { action = [&] { return cmd_pairs(cfg, pair_args, out); }; });

    InvariantArgs inv_args;
    auto* inv = app.add_subcommand("invariant", "arithmetical invariants");
    inv->add_option("--name", inv_args.name)
        ->required()
        ->check(CLI::IsMember({"delta", "delta-star", "rho", "daleth", "m"}));
    inv->add_option("--group", inv_args.group)->required();
    inv->add_option("--subset", inv_args.subset);
    inv->add_option("--bound", inv_args.bound, "length bound for bounded sweeps")->check(CLI::Range(2, 64));
    inv->add_option("--k", inv_args.k, "rho_k instead of rho")->check(CLI::PositiveNumber);
    inv->add_option("--max-order", inv_args.max_order, "subset sweep group order limit");
    inv->add_option("--max-k", inv_args.rho.max_k, "rho_k limit on k");
    inv->add_option("--max-atoms", inv_args.rho.max_atoms, "rho_k limit on the atom count");
    inv->callback([&] { action = [&] { return cmd_invariant(cfg, inv_args, out); }; });

    std::string cls_set;
    auto* cls = app.add_subcommand("classify", "interval and AMP structure of a finite set");
    cls->add_option("--set", cls_set, "e.g. \"2,5,6,9\"")->required();
    cls->callback([&] { action = [&] { return cmd_classify(cfg, cls_set, out); }; });

    std::string fam_name;
    std::vector<std::string> fam_params;
    auto* fam = app.add_subcommand("family", "closed-form families of sets");
    fam->add_option("--name", fam_name, "theorem_a, lemma72, lemma54, prop53, amp4_c6")->required();
    fam->add_option("--params", fam_params, "parameters")->delimiter(',');
    fam->callback([&] { action = [&] { return cmd_family(cfg, fam_name, fam_params, out); }; });

    VerifyArgs ver_args;
    auto* ver = app.add_subcommand("verify", "run registered checks");
    ver->add_option("--check", ver_args.checks, "check id (repeatable)");
    ver->add_flag("--all", ver_args.all, "every default check");
    ver->add_flag("--include-long", ver_args.include_long, "include opt-in long checks");
    ver->add_flag("--list", ver_args.list, "list registered checks");
    ver->callback([&] { action = [&] { return cmd_verify(cfg, ver_args, out); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
    }

    try {
        return action();
    } catch (const GuardError& e) {
        report_error(cfg, err, e, &e);
        return exit_guard;
    } catch (const Error& e) {
        report_error(cfg, err, e, nullptr);
        return exit_usage;
    }
}

}  // namespace zsl
