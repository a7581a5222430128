#pragma once

#include "zsl/sequence.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <vector>

namespace zsl {

struct AtomSet {
    FiniteAbelianGroup group;
    std::vector<ElementId> subset;  // sorted
    std::vector<Sequence> atoms;    // sorted canonically
    int davenport = 0;

    friend bool operator==(const AtomSet& a, const AtomSet& b)
    {
        return a.group == b.group && a.subset == b.subset && a.atoms == b.atoms && a.davenport == b.davenport;
    }
};

bool is_atom(const Sequence& S);

/// All elements of G in canonical order.
std::vector<ElementId> all_elements(const FiniteAbelianGroup& G);

struct AtomSearch {
    std::vector<ElementId> subset;  // need not be sorted; duplicates ignored
    std::vector<int> caps;          // optional per-element multiplicity bound (parallel to subset)
    int min_length = 1;
    int max_length = 0;             // 0 means |G|
};

/// Streams every atom matching the search, each exactly once, in DFS order.
/// Returning false from the callback stops the search.
void for_each_atom(const FiniteAbelianGroup& G, const AtomSearch& search,
                   const std::function<bool(const Sequence&)>& callback);

AtomSet enumerate_atoms(const FiniteAbelianGroup& G, const std::vector<ElementId>& subset);
AtomSet enumerate_atoms(const FiniteAbelianGroup& G);
int davenport(const FiniteAbelianGroup& G, const std::vector<ElementId>& subset);
int davenport(const FiniteAbelianGroup& G);
std::vector<Sequence> atoms_of_length(const FiniteAbelianGroup& G, const std::vector<ElementId>& subset, int length);
/// Atoms U with U | B.
std::vector<Sequence> atoms_dividing(const Sequence& B);

/// One representative per orbit of atoms of C_2^r under basis change:
/// e_1 ... e_{l-1} (e_1 + ... + e_{l-1}) for l in [2, r+1], plus (0).
std::vector<Sequence> standard_circuits(const FiniteAbelianGroup& G);

constexpr int kCacheFormatVersion = 1;

/// ZSLAB_CACHE_DIR, else $XDG_CACHE_HOME/zslab, else $HOME/.cache/zslab.
std::filesystem::path default_cache_dir();
std::filesystem::path cache_path(const std::filesystem::path& dir, const FiniteAbelianGroup& G,
                                 const std::vector<ElementId>& subset);
std::optional<AtomSet> cache_load(const std::filesystem::path& dir, const FiniteAbelianGroup& G,
                                  const std::vector<ElementId>& subset);
void cache_store(const std::filesystem::path& dir, const AtomSet& atoms);
/// Loads from the cache, recomputing (and rewriting) on a miss or a corrupt or
/// stale entry.
AtomSet cached_atoms(const std::filesystem::path& dir, const FiniteAbelianGroup& G,
                     const std::vector<ElementId>& subset);

std::string render_subset(const FiniteAbelianGroup& G, const std::vector<ElementId>& subset);

}  // namespace zsl
