#include "zsl/atoms.hpp"

#include "zsl/error.hpp"

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

namespace zsl {

bool is_atom(const Sequence& S)
{
    if (S.empty())
        throw Error(Errc::invalid_argument, "the empty sequence is not an atom");
    if (S.sum() != 0)
        return false;
    if (S.length() == 1)
        return true;
    // If T is a nonempty proper zero-sum subsequence, so is its complement, and
    // one of the two misses a fixed copy of g. So S is minimal iff S g^{-1} is
    // zero-sum free.
    const ElementId g = S.entries().front().element;
    return is_zero_sum_free(divide(S, Sequence::power_of(S.group(), g, 1)));
}

std::vector<ElementId> all_elements(const FiniteAbelianGroup& G)
{
    std::vector<ElementId> out(G.order());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<ElementId>(i);
    return out;
}

namespace {

class AtomDfs {
public:
    AtomDfs(const FiniteAbelianGroup& G, const AtomSearch& search, const std::function<bool(const Sequence&)>& cb)
        : G_(G), cb_(cb)
    {
        std::vector<std::pair<ElementId, int>> items;
        for (std::size_t i = 0; i < search.subset.size(); ++i) {
            const ElementId x = search.subset[i];
            if (x >= G.order())
                throw Error(Errc::invalid_argument, "subset element " + std::to_string(x) + " outside " + G.name());
            const int cap = search.caps.empty() ? G.order_of(x) : search.caps.at(i);
            items.emplace_back(x, cap);
        }
        std::sort(items.begin(), items.end());
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (i > 0 && items[i].first == items[i - 1].first)
                continue;
            if (items[i].first == 0)
                has_zero_ = items[i].second > 0;
            else if (items[i].second > 0) {
                elems_.push_back(items[i].first);
                caps_.push_back(items[i].second);
            }
        }
        min_len_ = std::max(1, search.min_length);
        max_len_ = search.max_length > 0 ? search.max_length : static_cast<int>(G.order());
        counts_.assign(elems_.size(), 0);
    }

    void run()
    {
        if (has_zero_ && min_len_ <= 1 && max_len_ >= 1) {
            if (!cb_(Sequence::power_of(G_, 0, 1)))
                return;
        }
        words_ = (G_.order() + 63) / 64;
        const int depth = std::max(1, max_len_ + 1);
        stack_.assign(static_cast<std::size_t>(depth) * words_, 0);
        neg_.resize(elems_.size());
        for (std::size_t j = 0; j < elems_.size(); ++j)
            neg_[j] = G_.neg(elems_[j]);
        dfs(0, 0, 0);
    }

private:
    void emit()
    {
        std::vector<std::pair<ElementId, int>> pairs;
        for (std::size_t i = 0; i < elems_.size(); ++i)
            if (counts_[i] > 0)
                pairs.emplace_back(elems_[i], counts_[i]);
        Sequence S = Sequence::from_counts(G_, pairs);
        if (is_atom(S) && !cb_(S))
            stop_ = true;
    }

    // stack_ level `len` holds the sums of nonempty subsequences of the prefix
    void dfs(std::size_t start, int len, ElementId sum)
    {
        if (len >= max_len_)
            return;
        const std::uint64_t* reach = &stack_[static_cast<std::size_t>(len) * words_];
        std::uint64_t* next = &stack_[static_cast<std::size_t>(len + 1) * words_];
        for (std::size_t j = start; j < elems_.size() && !stop_; ++j) {
            if (counts_[j] >= caps_[j])
                continue;
            const ElementId x = elems_[j];
            const ElementId s2 = G_.add(sum, x);
            const ElementId nx = neg_[j];
            if ((reach[nx >> 6] >> (nx & 63)) & 1U) {
                // the extension contains a zero-sum subsequence through x; it can
                // only be an atom if that subsequence is everything
                if (s2 == 0 && len + 1 >= min_len_) {
                    ++counts_[j];
                    emit();
                    --counts_[j];
                }
                continue;
            }
            if (len + 1 >= max_len_)
                continue;
            std::copy(reach, reach + words_, next);
            for (std::size_t w = 0; w < words_; ++w) {
                std::uint64_t word = reach[w];
                while (word != 0) {
                    const auto b = static_cast<ElementId>(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
                    word &= word - 1;
                    const ElementId y = G_.add(b, x);
                    next[y >> 6] |= std::uint64_t{1} << (y & 63);
                }
            }
            next[x >> 6] |= std::uint64_t{1} << (x & 63);
            ++counts_[j];
            dfs(j, len + 1, s2);
            --counts_[j];
        }
    }

    const FiniteAbelianGroup& G_;
    const std::function<bool(const Sequence&)>& cb_;
    std::vector<ElementId> elems_;
    std::vector<int> caps_;
    std::vector<int> counts_;
    std::vector<ElementId> neg_;
    std::vector<std::uint64_t> stack_;
    std::size_t words_ = 1;
    bool has_zero_ = false;
    bool stop_ = false;
    int min_len_ = 1;
    int max_len_ = 0;
};

std::vector<Sequence> collect(const FiniteAbelianGroup& G, const AtomSearch& search)
{
    std::vector<Sequence> out;
    for_each_atom(G, search, [&](const Sequence& S) {
        out.push_back(S);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ElementId> normalize_subset(const FiniteAbelianGroup& G, std::vector<ElementId> subset)
{
    for (ElementId x : subset)
        if (x >= G.order())
            throw Error(Errc::invalid_argument, "subset element " + std::to_string(x) + " outside " + G.name());
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    return subset;
}

std::string sha256_hex(const std::string& data)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw Error(Errc::invalid_argument, "sha256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
    }
    return out;
}

}  // namespace

void for_each_atom(const FiniteAbelianGroup& G, const AtomSearch& search,
                   const std::function<bool(const Sequence&)>& callback)
{
    if (!search.caps.empty() && search.caps.size() != search.subset.size())
        throw Error(Errc::invalid_argument, "caps must parallel the subset");
    AtomDfs dfs(G, search, callback);
    dfs.run();
}

AtomSet enumerate_atoms(const FiniteAbelianGroup& G, const std::vector<ElementId>& subset)
{
    AtomSet out;
    out.group = G;
    out.subset = normalize_subset(G, subset);
    if (out.subset.empty())
        throw Error(Errc::invalid_argument, "subset must be nonempty");
    AtomSearch search;
    search.subset = out.subset;
    out.atoms = collect(G, search);
    for (const auto& U : out.atoms)
        out.davenport = std::max(out.davenport, U.length());
    return out;
}

AtomSet enumerate_atoms(const FiniteAbelianGroup& G) { return enumerate_atoms(G, all_elements(G)); }

int davenport(const FiniteAbelianGroup& G, const std::vector<ElementId>& subset)
{
    int d = 0;
    AtomSearch search;
    search.subset = normalize_subset(G, subset);
    for_each_atom(G, search, [&](const Sequence& S) {
        d = std::max(d, S.length());
        return true;
    });
    return d;
}

int davenport(const FiniteAbelianGroup& G) { return davenport(G, all_elements(G)); }

std::vector<Sequence> atoms_of_length(const FiniteAbelianGroup& G, const std::vector<ElementId>& subset, int length)
{
    if (length < 1)
        throw Error(Errc::invalid_argument, "atom length must be >= 1");
    AtomSearch search;
    search.subset = normalize_subset(G, subset);
    search.min_length = length;
    search.max_length = length;
    return collect(G, search);
}

std::vector<Sequence> atoms_dividing(const Sequence& B)
{
    AtomSearch search;
    for (const auto& e : B.entries()) {
        search.subset.push_back(e.element);
        search.caps.push_back(e.multiplicity);
    }
    search.max_length = std::max(1, B.length());
    if (B.empty())
        return {};
    return collect(B.group(), search);
}

std::vector<Sequence> standard_circuits(const FiniteAbelianGroup& G)
{
    if (!is_elementary_2_group(G))
        throw Error(Errc::invalid_argument, "standard circuits need an elementary 2-group");
    const int r = G.rank();
    std::vector<Sequence> out{Sequence::power_of(G, 0, 1)};
    auto basis = [&](int i) {
        std::vector<long long> c(static_cast<std::size_t>(r), 0);
        c[static_cast<std::size_t>(i)] = 1;
        return G.from_coords(c);
    };
    for (int l = 2; l <= r + 1; ++l) {
        std::vector<ElementId> ids;
        ElementId total = 0;
        for (int i = 0; i < l - 1; ++i) {
            ids.push_back(basis(i));
            total = G.add(total, basis(i));
        }
        ids.push_back(total);
        out.push_back(Sequence::from_ids(G, ids));
    }
    return out;
}

std::string render_subset(const FiniteAbelianGroup& G, const std::vector<ElementId>& subset)
{
    std::string out;
    for (ElementId x : subset) {
        if (!out.empty())
            out += ' ';
        out += render(G, x);
    }
    return out;
}

std::filesystem::path default_cache_dir()
{
    if (const char* env = std::getenv("ZSLAB_CACHE_DIR"); env && *env)
        return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "zslab";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "zslab";
    return std::filesystem::temp_directory_path() / "zslab";
}

std::filesystem::path cache_path(const std::filesystem::path& dir, const FiniteAbelianGroup& G,
                                 const std::vector<ElementId>& subset)
{
    const std::string key = std::to_string(kCacheFormatVersion) + "\n" + G.spec() + "\n"
                            + render_subset(G, normalize_subset(G, subset));
    return dir / (sha256_hex(key) + ".json");
}

std::optional<AtomSet> cache_load(const std::filesystem::path& dir, const FiniteAbelianGroup& G,
                                  const std::vector<ElementId>& subset)
{
    const auto path = cache_path(dir, G, subset);
    std::ifstream in(path);
    if (!in)
        return std::nullopt;
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::cache_corrupt, path.string() + ": " + e.what());
    }
    AtomSet out;
    out.group = G;
    out.subset = normalize_subset(G, subset);
    try {
        if (j.at("format_version").get<int>() != kCacheFormatVersion)
            throw Error(Errc::cache_stale, path.string() + ": format version "
                                               + std::to_string(j.at("format_version").get<int>()));
        if (j.at("group").get<std::string>() != G.spec()
            || j.at("subset").get<std::string>() != render_subset(G, out.subset))
            throw Error(Errc::cache_corrupt, path.string() + ": header does not match the requested group/subset");
        for (const auto& lit : j.at("atoms"))
            out.atoms.push_back(parse_sequence(G, lit.get<std::string>()));
        out.davenport = j.at("davenport").get<int>();
        if (j.at("atom_count").get<std::size_t>() != out.atoms.size())
            throw Error(Errc::cache_corrupt, path.string() + ": atom count mismatch");
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::cache_corrupt, path.string() + ": " + e.what());
    } catch (const Error& e) {
        if (e.code() == Errc::cache_stale || e.code() == Errc::cache_corrupt)
            throw;
        throw Error(Errc::cache_corrupt, path.string() + ": " + e.what());
    }
    return out;
}

void cache_store(const std::filesystem::path& dir, const AtomSet& atoms)
{
    std::filesystem::create_directories(dir);
    nlohmann::json j;
    j["format_version"] = kCacheFormatVersion;
    j["group"] = atoms.group.spec();
    j["subset"] = render_subset(atoms.group, atoms.subset);
    j["davenport"] = atoms.davenport;
    j["atom_count"] = atoms.atoms.size();
    auto list = nlohmann::json::array();
    for (const auto& U : atoms.atoms)
        list.push_back(render(U));
    j["atoms"] = std::move(list);

    const auto path = cache_path(dir, atoms.group, atoms.subset);
    auto tmp = path;
    tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
    {
        std::ofstream out(tmp);
        if (!out)
            throw Error(Errc::invalid_argument, "cannot write cache file " + tmp.string());
        out << j.dump() << '\n';
    }
    std::filesystem::rename(tmp, path);
}

AtomSet cached_atoms(const std::filesystem::path& dir, const FiniteAbelianGroup& G,
                     const std::vector<ElementId>& subset)
{
    try {
        if (auto hit = cache_load(dir, G, subset))
            return *hit;
    } catch (const Error& e) {
        if (e.code() != Errc::cache_corrupt && e.code() != Errc::cache_stale)
            throw;
    }
    AtomSet fresh = enumerate_atoms(G, subset);
    cache_store(dir, fresh);
    return fresh;
}

}  // namespace zsl
