#include "ipset/search.hpp"

#include "ipset/canonical.hpp"
#include "ipset/errors.hpp"
#include "ipset/search_detail.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <unordered_map>

namespace ipset {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

// Scale factor 2d turns every candidate coordinate into an integer:
// X = 2d * x = d^2 + a^2 - b^2 and S = 2d * y / sqrt(k).
struct RawCandidate {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t X = 0;
    std::int64_t S = 0;
};

bool key_less(const RawCandidate& p, const RawCandidate& q)
{
    if (p.a != q.a)
        return p.a < q.a;
    if (p.b != q.b)
        return p.b < q.b;
    return p.S > q.S; // upper mirror image first
}

using Groups = std::map<u128, std::vector<RawCandidate>>;

u128 to_u128(const Integer& v)
{
    if (v < 0)
        throw DomainError("negative value where a characteristic was expected");
    return static_cast<u128>(to_int128(v));
}

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Square-free sets as numbers: sqf(x * y) for square-free x, y.
u128 symmetric_difference(u128 x, u128 y)
{
    u128 a = x, b = y;
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return (x / a) * (y / a);
}

std::vector<Integer> squarefree_divisors(const Integer& n)
{
    std::vector<Integer> divisors{1};
    for (const auto& pp : factorize(n)) {
        const std::size_t size = divisors.size();
        for (std::size_t i = 0; i < size; ++i)
            divisors.push_back(divisors[i] * pp.prime);
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

// All candidates over base d with a, b <= d_max, grouped by characteristic.
// With u = a + b and v = a - b the Heron product is (u^2 - d^2)(d^2 - v^2), so
// the characteristic is the symmetric difference of two square-free parts
// that each depend on one index only.
Groups collect_candidates(std::int64_t d, std::int64_t d_max, const CharFilter& filter,
                          const detail::SquarefreeSieve& sieve)
{
    Groups groups;
    const std::int64_t d_sq = d * d;

    std::vector<detail::SquareSplit> vs(static_cast<std::size_t>(d));
    for (std::int64_t v = 0; v < d; ++v) {
        const auto w = detail::combine(sieve.split(static_cast<std::uint64_t>(d - v)),
                                       sieve.split(static_cast<std::uint64_t>(d + v)));
        vs[static_cast<std::size_t>(v)] = {static_cast<std::uint64_t>(w.squarefree), static_cast<std::uint64_t>(w.root)};
    }

    auto emit = [&](std::int64_t u, std::int64_t v, const detail::SquareSplit& us) {
        const std::int64_t a = (u + v) / 2;
        if (a > d_max)
            return;
        const auto& bs = vs[static_cast<std::size_t>(v)];
        const std::uint64_t g = std::gcd(us.squarefree, bs.squarefree);
        const u128 k = static_cast<u128>(us.squarefree / g) * (bs.squarefree / g);
        const auto s = static_cast<std::int64_t>(us.root * bs.root * g);
        auto& bucket = groups[k];
        const std::int64_t b = (u - v) / 2;
        bucket.push_back({a, b, d_sq + u * v, s});
        bucket.push_back({a, b, d_sq + u * v, -s});
        if (v != 0) {
            bucket.push_back({b, a, d_sq - u * v, s});
            bucket.push_back({b, a, d_sq - u * v, -s});
        }
    };

    auto u_split = [&](std::int64_t u) {
        const auto w = detail::combine(sieve.split(static_cast<std::uint64_t>(u - d)),
                                       sieve.split(static_cast<std::uint64_t>(u + d)));
        return detail::SquareSplit{static_cast<std::uint64_t>(w.squarefree), static_cast<std::uint64_t>(w.root)};
    };

    // Targeted lookup when the admissible characteristics are few.
    std::vector<u128> targets;
    if (filter.kind == CharFilter::Kind::Fixed) {
        if (filter.value < 1)
            return groups;
        if (mpz_sizeinbase(filter.value.get_mpz_t(), 2) > 120)
            return groups; // larger than any Heron product over d_max <= 10^6
        targets.push_back(to_u128(filter.value));
    } else if (filter.kind == CharFilter::Kind::DivisorOf &&
               factorize(filter.value).size() <= 12) {
        for (const auto& div : squarefree_divisors(filter.value))
            if (mpz_sizeinbase(div.get_mpz_t(), 2) <= 120)
                targets.push_back(to_u128(div));
    }

    if (!targets.empty()) {
        std::unordered_map<std::uint64_t, std::vector<std::int64_t>> by_sqf;
        for (std::int64_t v = 0; v < d; ++v)
            by_sqf[vs[static_cast<std::size_t>(v)].squarefree].push_back(v);
        for (std::int64_t u = d + 1; u <= 2 * d_max; ++u) {
            const auto us = u_split(u);
            for (const u128 k : targets) {
                const u128 want = symmetric_difference(us.squarefree, k);
                if (want > UINT64_MAX)
                    continue;
                const auto it = by_sqf.find(static_cast<std::uint64_t>(want));
                if (it == by_sqf.end())
                    continue;
                for (const std::int64_t v : it->second)
                    if ((u - v) % 2 == 0)
                        emit(u, v, us);
            }
        }
    } else {
        for (std::int64_t u = d + 1; u <= 2 * d_max; ++u) {
            const auto us = u_split(u);
            for (std::int64_t v = u % 2; v < d; v += 2)
                emit(u, v, us);
        }
        if (filter.kind != CharFilter::Kind::Any)
            std::erase_if(groups, [&](const auto& g) { return !filter.admits(to_integer(g.first)); });
    }

    for (auto& [k, bucket] : groups)
        std::sort(bucket.begin(), bucket.end(), key_less);
    return groups;
}

bool plausible_square(u128 n)
{
    // quadratic residues mod 64, 63, 65, 11
    static const auto residues = [] {
        std::array<std::array<bool, 65>, 4> r{};
        const int mods[4] = {64, 63, 65, 11};
        for (int m = 0; m < 4; ++m)
            for (int x = 0; x < mods[m]; ++x)
                r[static_cast<std::size_t>(m)][static_cast<std::size_t>(x * x % mods[m])] = true;
        return r;
    }();
    return residues[0][static_cast<std::size_t>(n % 64)] && residues[1][static_cast<std::size_t>(n % 63)] &&
           residues[2][static_cast<std::size_t>(n % 65)] && residues[3][static_cast<std::size_t>(n % 11)];
}

// Distance between two scaled candidates if it is an integer.
std::optional<std::int64_t> raw_distance(const RawCandidate& p, const RawCandidate& q, std::int64_t d, u128 k)
{
    const i128 dx = static_cast<i128>(p.X) - q.X;
    const i128 ds = static_cast<i128>(p.S) - q.S;
    const u128 n = static_cast<u128>(dx * dx) + k * static_cast<u128>(ds * ds);
    if (!plausible_square(n))
        return std::nullopt;
    const u128 r = detail::isqrt_u128(n);
    if (r * r != n || r % static_cast<u128>(2 * d) != 0)
        return std::nullopt;
    return static_cast<std::int64_t>(r / static_cast<u128>(2 * d));
}

bool collinear(std::int64_t x, std::int64_t y, std::int64_t z)
{
    return x + y == z || x + z == y || y + z == x;
}

struct ScaledPoint {
    std::int64_t X = 0;
    std::int64_t S = 0;
};

template <typename Wide>
Wide widen(std::int64_t v)
{
    if constexpr (std::is_same_v<Wide, Integer>)
        return Integer(static_cast<long>(v));
    else
        return static_cast<Wide>(v);
}

template <typename Wide>
Wide widen_k(u128 k)
{
    if constexpr (std::is_same_v<Wide, Integer>)
        return to_integer(k);
    else
        return static_cast<Wide>(k);
}

// Lifted determinant over scaled points (X, S * sqrt(k)); the sqrt(k) factor
// of the S column is dropped.
template <typename Wide>
bool concyclic(const ScaledPoint& a, const ScaledPoint& b, const ScaledPoint& c, const ScaledPoint& e, const Wide& k)
{
    auto row = [&](const ScaledPoint& p) {
        const Wide dx = widen<Wide>(p.X - a.X);
        const Wide ds = widen<Wide>(p.S - a.S);
        return std::array<Wide, 3>{dx * dx + k * ds * ds, dx, ds};
    };
    const auto r0 = row(b), r1 = row(c), r2 = row(e);
    const Wide det = r0[0] * (r1[1] * r2[2] - r1[2] * r2[1]) - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0]) +
                     r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]);
    return det == 0;
}

template <typename Wide>
class CliqueKernel {
public:
    CliqueKernel(std::span<const RawCandidate> cands, std::int64_t d, u128 k, std::size_t clique_size,
                 bool check_circles)
        : cands_(cands), d_(d), k_(k), wide_k_(widen_k<Wide>(k)), target_(clique_size), check_circles_(check_circles),
          sorted_(std::is_sorted(cands.begin(), cands.end(), key_less))
    {
        pts_.push_back({0, 0});
        pts_.push_back({2 * d * d, 0});
        for (const auto& c : cands_)
            pts_.push_back({c.X, c.S});
    }

    std::vector<DistanceMatrix> run()
    {
        const std::size_t m = cands_.size();
        if (target_ == 0 || m < target_)
            return {};
        adj_.assign(m, {});
        if (target_ > 1)
            build_edges();
        std::vector<std::size_t> all(m);
        for (std::size_t i = 0; i < m; ++i)
            all[i] = i;
        std::vector<std::size_t> clique;
        expand(clique, all);

        std::vector<DistanceMatrix> out;
        out.reserve(found_.size());
        for (auto& [v, mat] : found_)
            out.push_back(std::move(mat));
        return out;
    }

private:
    const ScaledPoint& pt(std::size_t cand) const { return pts_[cand + 2]; }

    void build_edges()
    {
        const std::size_t m = cands_.size();
        const ScaledPoint& p1 = pts_[0];
        const ScaledPoint& p2 = pts_[1];
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                const auto dist = raw_distance(cands_[i], cands_[j], d_, k_);
                if (!dist || *dist > d_)
                    continue;
                const std::int64_t e = *dist;
                if (collinear(cands_[i].a, cands_[j].a, e) || collinear(cands_[i].b, cands_[j].b, e))
                    continue;
                if (check_circles_ && concyclic<Wide>(p1, p2, pt(i), pt(j), wide_k_))
                    continue;
                adj_[i].push_back({j, e});
            }
    }

    std::int64_t dist(std::size_t i, std::size_t j) const
    {
        if (i > j)
            std::swap(i, j);
        const auto& row = adj_[i];
        const auto it = std::lower_bound(row.begin(), row.end(), j,
                                         [](const std::pair<std::size_t, std::int64_t>& e, std::size_t v) {
                                             return e.first < v;
                                         });
        return it->second;
    }

    bool compatible(const std::vector<std::size_t>& clique, std::size_t c) const
    {
        const std::size_t s = clique.size();
        for (std::size_t x = 0; x < s; ++x)
            for (std::size_t y = x + 1; y < s; ++y) {
                const std::size_t p = clique[x], q = clique[y];
                if (collinear(dist(p, q), dist(p, c), dist(q, c)))
                    return false;
                if (!check_circles_)
                    continue;
                if (concyclic<Wide>(pts_[0], pt(p), pt(q), pt(c), wide_k_) ||
                    concyclic<Wide>(pts_[1], pt(p), pt(q), pt(c), wide_k_))
                    return false;
                for (std::size_t z = y + 1; z < s; ++z)
                    if (concyclic<Wide>(pt(p), pt(q), pt(clique[z]), pt(c), wide_k_))
                        return false;
            }
        return true;
    }

    void expand(std::vector<std::size_t>& clique, const std::vector<std::size_t>& cand)
    {
        if (clique.size() == target_) {
            emit(clique);
            return;
        }
        std::vector<std::size_t> next;
        for (std::size_t idx = 0; idx < cand.size(); ++idx) {
            if (cand.size() - idx + clique.size() < target_)
                break;
            const std::size_t c = cand[idx];
            // A set and its mirror image share one canonical form.
            if (clique.empty() && sorted_ && cands_[c].S < 0)
                continue;
            if (!compatible(clique, c))
                continue;
            next.clear();
            if (clique.size() + 1 < target_) {
                const auto& row = adj_[c];
                auto it = row.begin();
                for (std::size_t r = idx + 1; r < cand.size(); ++r) {
                    while (it != row.end() && it->first < cand[r])
                        ++it;
                    if (it != row.end() && it->first == cand[r])
                        next.push_back(cand[r]);
                }
                if (clique.size() + 1 + next.size() < target_)
                    continue;
            }
            clique.push_back(c);
            expand(clique, next);
            clique.pop_back();
        }
    }

    void emit(const std::vector<std::size_t>& clique)
    {
        const auto lowest = *std::min_element(clique.begin(), clique.end(), [&](std::size_t x, std::size_t y) {
            return key_less(cands_[x], cands_[y]);
        });
        if (cands_[lowest].S < 0)
            return; // its mirror image is emitted instead
        const std::size_t n = clique.size() + 2;
        DistanceMatrix m(n);
        m.set_symmetric(0, 1, Integer(static_cast<long>(d_)));
        for (std::size_t i = 0; i < clique.size(); ++i) {
            const auto& c = cands_[clique[i]];
            m.set_symmetric(0, i + 2, Integer(static_cast<long>(c.a)));
            m.set_symmetric(1, i + 2, Integer(static_cast<long>(c.b)));
            for (std::size_t j = i + 1; j < clique.size(); ++j)
                m.set_symmetric(i + 2, j + 2, Integer(static_cast<long>(dist(clique[i], clique[j]))));
        }
        auto canon = canonical_form(m).matrix;
        auto key = canon.upper_vector();
        found_.emplace(std::move(key), std::move(canon));
    }

    std::span<const RawCandidate> cands_;
    std::int64_t d_;
    u128 k_;
    Wide wide_k_;
    std::size_t target_;
    bool check_circles_;
    bool sorted_;
    std::vector<ScaledPoint> pts_;
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> adj_;
    std::map<std::vector<Integer>, DistanceMatrix, std::greater<>> found_;
};

// The 128-bit determinant is exact while 96 d^8 < 2^127.
constexpr std::int64_t kWideDeterminantLimit = 30'000;

std::vector<DistanceMatrix> run_kernel(std::span<const RawCandidate> cands, std::int64_t d, u128 k,
                                       const SearchConfig& config)
{
    const std::size_t clique = config.target_n - 2;
    if (d <= kWideDeterminantLimit)
        return CliqueKernel<i128>(cands, d, k, clique, config.require_general_position).run();
    return CliqueKernel<Integer>(cands, d, k, clique, config.require_general_position).run();
}

CandidatePoint to_public(const RawCandidate& c, std::int64_t d)
{
    const Integer two_d = 2 * Integer(static_cast<long>(d));
    return {c.a, c.b, Rational(Integer(static_cast<long>(c.X)), two_d), Rational(Integer(static_cast<long>(c.S)), two_d),
            c.S < 0 ? -1 : 1};
}

RawCandidate from_public(const CandidatePoint& c, std::int64_t d)
{
    const Rational two_d(2 * Integer(static_cast<long>(d)));
    const Rational X = c.x * two_d;
    const Rational S = c.y_coeff * two_d;
    if (!X.is_integer() || !S.is_integer() || !X.num().fits_slong_p() || !S.num().fits_slong_p())
        throw DomainError("candidate point is not over base " + std::to_string(d));
    return {c.a, c.b, X.num().get_si(), S.num().get_si()};
}

void require_search_diameter(std::int64_t d, const char* what)
{
    if (d < 1 || d > kMaxSearchDiameter)
        throw DomainError(std::string(what) + " must lie in [1, " + std::to_string(kMaxSearchDiameter) + "]");
}

} // namespace

bool CharFilter::admits(const Integer& k) const
{
    switch (kind) {
    case Kind::Any: return true;
    case Kind::Fixed: return k == value;
    case Kind::DivisorOf: return k > 0 && value % k == 0;
    }
    return false;
}

std::string CharFilter::str() const
{
    switch (kind) {
    case Kind::Any: return "any";
    case Kind::Fixed: return value.get_str();
    case Kind::DivisorOf: return "div:" + value.get_str();
    }
    return "any";
}

CharFilter CharFilter::parse(const std::string& text)
{
    if (text == "any")
        return any();
    const bool div = text.rfind("div:", 0) == 0;
    const Integer v = parse_integer(div ? text.substr(4) : text);
    if (!is_squarefree(v))
        throw DomainError("characteristic filter value must be a positive square-free integer: " + text);
    return div ? divisor_of(v) : fixed(v);
}

std::optional<std::string> SearchConfig::validation_error() const
{
    if (target_n < 3)
        return "target point count must be at least 3";
    if (d_min < 1)
        return "minimum diameter must be at least 1";
    if (d_min > d_max)
        return "minimum diameter exceeds maximum diameter";
    if (d_max > kMaxSearchDiameter)
        return "maximum diameter exceeds " + std::to_string(kMaxSearchDiameter);
    if (char_filter.kind != CharFilter::Kind::Any && !is_squarefree(char_filter.value))
        return "characteristic filter value must be square-free";
    if (cluster_mode && char_filter.kind == CharFilter::Kind::Fixed && char_filter.value != 1)
        return "cluster mode requires characteristic 1";
    if (shard.total < 1 || shard.index >= shard.total)
        return "shard index must be below the shard count";
    return std::nullopt;
}

void SearchConfig::validate() const
{
    if (auto why = validation_error())
        throw DomainError("invalid search configuration: " + *why);
}

CharFilter SearchConfig::effective_filter() const
{
    return cluster_mode ? CharFilter::fixed(1) : char_filter;
}

bool shard_owns(const Shard& shard, const OuterKey& key)
{
    if (shard.total <= 1)
        return true;
    const std::uint64_t kh = mpz_fdiv_ui(key.k.get_mpz_t(), 4294967291UL);
    const std::uint64_t h = splitmix64(splitmix64(static_cast<std::uint64_t>(key.d)) ^ kh);
    return h % shard.total == shard.index;
}

void for_each_triangle(std::int64_t d_max, const CharFilter& filter, const std::function<void(const Triangle&)>& visit)
{
    if (d_max < 1)
        return;
    require_search_diameter(d_max, "triangle bound");
    const bool any = filter.kind == CharFilter::Kind::Any;
    const detail::SquarefreeSieve sieve(any ? 1 : static_cast<std::uint64_t>(3 * d_max));
    for (std::int64_t a = d_max; a >= 1; --a)
        for (std::int64_t b = a; 2 * b > a; --b)
            for (std::int64_t c = b; c > a - b; --c) {
                if (!any && !filter.admits(to_integer(detail::fast_characteristic(sieve, a, b, c))))
                    continue;
                visit({a, b, c});
            }
}

std::vector<Triangle> enumerate_triangles(std::int64_t d_max, const CharFilter& filter)
{
    std::vector<Triangle> out;
    for_each_triangle(d_max, filter, [&](const Triangle& t) { out.push_back(t); });
    return out;
}

std::uint64_t count_triangles(std::int64_t d_max, const CharFilter& filter)
{
    std::uint64_t n = 0;
    for_each_triangle(d_max, filter, [&](const Triangle&) { ++n; });
    return n;
}

std::vector<std::pair<Integer, std::vector<CandidatePoint>>>
candidates_by_characteristic(std::int64_t d_base, std::int64_t d_max, const CharFilter& filter)
{
    require_search_diameter(d_base, "base diameter");
    require_search_diameter(d_max, "candidate distance bound");
    if (d_base > d_max)
        throw DomainError("base diameter exceeds candidate distance bound");
    const detail::SquarefreeSieve sieve(static_cast<std::uint64_t>(3 * d_max));
    std::vector<std::pair<Integer, std::vector<CandidatePoint>>> out;
    for (const auto& [k, raw] : collect_candidates(d_base, d_max, filter, sieve)) {
        std::vector<CandidatePoint> pts;
        pts.reserve(raw.size());
        for (const auto& c : raw)
            pts.push_back(to_public(c, d_base));
        out.emplace_back(to_integer(k), std::move(pts));
    }
    return out;
}

std::vector<CandidatePoint> candidate_points(std::int64_t d_base, const Integer& k, std::int64_t d_max)
{
    if (!is_squarefree(k))
        throw DomainError("radicand must be square-free: " + k.get_str());
    auto groups = candidates_by_characteristic(d_base, d_max, CharFilter::fixed(k));
    if (groups.empty())
        return {};
    return std::move(groups.front().second);
}

std::optional<Integer> integral_pair_check(const CandidatePoint& p, const CandidatePoint& q, std::int64_t d_base,
                                           const Integer& k)
{
    require_search_diameter(d_base, "base diameter");
    const auto dist = raw_distance(from_public(p, d_base), from_public(q, d_base), d_base, to_u128(k));
    if (!dist)
        return std::nullopt;
    return Integer(static_cast<long>(*dist));
}

std::vector<DistanceMatrix> extend_cliques(std::span<const CandidatePoint> candidates, std::int64_t d_base,
                                           const Integer& k, const SearchConfig& config)
{
    config.validate();
    require_search_diameter(d_base, "base diameter");
    std::vector<RawCandidate> raw;
    raw.reserve(candidates.size());
    for (const auto& c : candidates)
        if (c.a <= d_base && c.b <= d_base)
            raw.push_back(from_public(c, d_base));
    return run_kernel(raw, d_base, to_u128(k), config);
}

void search(const SearchConfig& config, const SearchObserver& observer)
{
    config.validate();
    const CharFilter filter = config.effective_filter();
    const detail::SquarefreeSieve sieve(static_cast<std::uint64_t>(3 * config.d_max));
    for (std::int64_t d = config.d_min; d <= config.d_max; ++d) {
        if (observer.should_stop && observer.should_stop())
            return;
        for (const auto& [k, cands] : collect_candidates(d, d, filter, sieve)) {
            const OuterKey key{d, to_integer(k)};
            if (!shard_owns(config.shard, key))
                continue;
            if (observer.skip_key && observer.skip_key(key))
                continue;
            if (observer.should_stop && observer.should_stop())
                return;
            for (auto& m : run_kernel(cands, d, k, config))
                if (observer.on_result)
                    observer.on_result(FoundSet{d, key.k, std::move(m)});
            if (observer.on_key_done)
                observer.on_key_done(key);
        }
    }
}

std::vector<FoundSet> search_all(const SearchConfig& config)
{
    std::vector<FoundSet> out;
    SearchObserver observer;
    observer.on_result = [&](const FoundSet& f) { out.push_back(f); };
    search(config, observer);
    return out;
}

std::optional<std::int64_t> minimum_diameter(std::size_t target_n, std::int64_t d_cap, const CharFilter& filter)
{
    SearchConfig config;
    config.target_n = target_n;
    config.d_min = 1;
    config.d_max = d_cap;
    config.char_filter = filter;
    config.validate();
    std::optional<std::int64_t> found;
    SearchObserver observer;
    observer.on_result = [&](const FoundSet& f) { found = found ? std::min(*found, f.diameter) : f.diameter; };
    observer.should_stop = [&] { return found.has_value(); };
    search(config, observer);
    return found;
}

std::vector<SearchConfig> partition(const SearchConfig& config, std::size_t total_shards)
{
    if (total_shards < 1)
        throw DomainError("shard count must be at least 1");
    if (config.shard.total != 1)
        throw DomainError("configuration is already a shard");
    std::vector<SearchConfig> out(total_shards, config);
    for (std::size_t i = 0; i < total_shards; ++i)
        out[i].shard = {i, total_shards};
    return out;
}

} // namespace ipset
