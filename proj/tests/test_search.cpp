#include "fixtures.hpp"
#include "oracles.hpp"

#include "ipset/canonical.hpp"
#include "ipset/embedding.hpp"
#include "ipset/errors.hpp"
#include "ipset/geometry.hpp"
#include "ipset/search.hpp"
#include "ipset/search_detail.hpp"
#include "ipset/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace ipset;

namespace {

std::set<std::vector<Integer>> vectors_of(const std::vector<FoundSet>& found)
{
    std::set<std::vector<Integer>> out;
    for (const auto& f : found)
        out.insert(f.matrix.upper_vector());
    return out;
}

SearchConfig make_config(std::size_t n, std::int64_t lo, std::int64_t hi, CharFilter filter = CharFilter::any())
{
    SearchConfig c;
    c.target_n = n;
    c.d_min = lo;
    c.d_max = hi;
    c.char_filter = std::move(filter);
    return c;
}

// Every admissible point over the base by direct enumeration of (a, b).
std::vector<CandidatePoint> brute_candidates(long d, const Integer& k, long d_max)
{
    std::vector<CandidatePoint> out;
    for (long a = 1; a <= d_max; ++a)
        for (long b = 1; b <= d_max; ++b) {
            if (!(a + b > d && a + d > b && b + d > a))
                continue;
            if (triangle_characteristic(d, a, b) != k)
                continue;
            const Rational x(Integer(d * d + a * a - b * b), Integer(2 * d));
            const auto y = rational_sqrt((Rational(a * a) - x * x) / Rational(k));
            REQUIRE(y);
            out.push_back({a, b, x, *y, 1});
            out.push_back({a, b, x, -*y, -1});
        }
    return out;
}

} // namespace

TEST_CASE("enumerate_triangles examples")
{
    CHECK(enumerate_triangles(2, CharFilter::any()) == std::vector<Triangle>{{2, 2, 2}, {2, 2, 1}, {1, 1, 1}});
    CHECK(enumerate_triangles(2, CharFilter::fixed(3)) == std::vector<Triangle>{{2, 2, 2}, {1, 1, 1}});
    CHECK(enumerate_triangles(1, CharFilter::any()) == std::vector<Triangle>{{1, 1, 1}});
    CHECK(enumerate_triangles(0, CharFilter::any()).empty());
}

TEST_CASE("enumerate_triangles matches brute force")
{
    const CharFilter filters[] = {CharFilter::any(), CharFilter::fixed(15), CharFilter::fixed(1),
                                  CharFilter::divisor_of(30), CharFilter::divisor_of(6469693230L)};
    for (const auto& filter : filters) {
        std::vector<Triangle> expected;
        for (long a = 1; a <= 25; ++a)
            for (long b = 1; b <= a; ++b)
                for (long c = 1; c <= b; ++c)
                    if (b + c > a && filter.admits(triangle_characteristic(a, b, c)))
                        expected.push_back({a, b, c});
        std::sort(expected.rbegin(), expected.rend());
        CHECK(enumerate_triangles(25, filter) == expected);
    }
}

TEST_CASE("sieve characteristic agrees with the generic route")
{
    const detail::SquarefreeSieve sieve(3 * 70'000);
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long> side(1, 70'000);
    int checked = 0;
    while (checked < 5000) {
        std::array<long, 3> s{side(rng), side(rng), side(rng)};
        std::sort(s.begin(), s.end());
        if (s[0] + s[1] <= s[2])
            continue;
        ++checked;
        REQUIRE(to_integer(detail::fast_characteristic(sieve, s[2], s[1], s[0])) ==
                triangle_characteristic(s[0], s[1], s[2]));
    }
    CHECK(to_integer(detail::fast_characteristic(sieve, 22270, 22098, 21488)) == 2002);
}

TEST_CASE("isqrt_u128")
{
    std::mt19937_64 rng(43);
    for (int i = 0; i < 2000; ++i) {
        const unsigned __int128 n = (static_cast<unsigned __int128>(rng()) << 62) ^ rng();
        const auto r = detail::isqrt_u128(n);
        REQUIRE(r * r <= n);
        REQUIRE((r + 1) * (r + 1) > n);
    }
}

TEST_CASE("triangle counts grow cubically")
{
    const double c50 = static_cast<double>(count_triangles(50, CharFilter::any())) / (50.0 * 50 * 50);
    const double c100 = static_cast<double>(count_triangles(100, CharFilter::any())) / (100.0 * 100 * 100);
    const double c200 = static_cast<double>(count_triangles(200, CharFilter::any())) / (200.0 * 200 * 200);
    const double lo = std::min({c50, c100, c200});
    const double hi = std::max({c50, c100, c200});
    CHECK(hi <= 2 * lo);
}

TEST_CASE("candidate_points examples")
{
    const auto c3 = candidate_points(3, 3, 3);
    const Rational h(Integer(3), Integer(2));
    CHECK(std::find(c3.begin(), c3.end(), CandidatePoint{3, 3, h, h, 1}) != c3.end());
    CHECK(std::find(c3.begin(), c3.end(), CandidatePoint{3, 3, h, -h, -1}) != c3.end());
    for (const auto& c : candidate_points(3, 5, 3))
        CHECK_FALSE((c.a == 3 && c.b == 3));
    CHECK_THROWS_AS(candidate_points(3, 4, 3), DomainError);

    const auto e = embed(fixtures::heptagon_22270());
    const auto coords = candidate_points(22270, 2002, 22270);
    const auto h7 = fixtures::heptagon_22270();
    for (std::size_t j = 2; j < 7; ++j) {
        const CandidatePoint want{h7(0, j).get_si(), h7(1, j).get_si(), e.points[j].x, e.points[j].y_coeff,
                                  e.points[j].y_coeff.sign()};
        CHECK(std::find(coords.begin(), coords.end(), want) != coords.end());
    }
}

TEST_CASE("candidate_points matches brute force")
{
    for (long d = 1; d <= 40; ++d) {
        for (long extra : {0L, 7L}) {
            std::set<Integer> ks;
            for (long a = 1; a <= d + extra; ++a)
                for (long b = 1; b <= d + extra; ++b)
                    if (a + b > d && a + d > b && b + d > a)
                        ks.insert(triangle_characteristic(d, a, b));
            for (const auto& k : ks) {
                auto want = brute_candidates(d, k, d + extra);
                auto got = candidate_points(d, k, d + extra);
                auto order = [](const CandidatePoint& p, const CandidatePoint& q) {
                    return std::tie(p.a, p.b, q.sign) < std::tie(q.a, q.b, p.sign);
                };
                std::sort(want.begin(), want.end(), order);
                REQUIRE(got == want);
            }
            // grouped view covers the same keys
            const auto groups = candidates_by_characteristic(d, d + extra, CharFilter::any());
            REQUIRE(groups.size() == ks.size());
        }
    }
}

TEST_CASE("integral_pair_check")
{
    const auto e = embed(fixtures::heptagon_22270());
    auto cand = [&](std::size_t j) {
        const auto h = fixtures::heptagon_22270();
        return CandidatePoint{h(0, j).get_si(), h(1, j).get_si(), e.points[j].x, e.points[j].y_coeff,
                              e.points[j].y_coeff.sign()};
    };
    CHECK(integral_pair_check(cand(3), cand(5), 22270, 2002) == Integer(11135));
    CHECK(integral_pair_check(cand(2), cand(6), 22270, 2002) == Integer(20066));

    const Rational h(Integer(3), Integer(2));
    const CandidatePoint up{3, 3, h, h, 1}, down{3, 3, h, -h, -1};
    CHECK_FALSE(integral_pair_check(up, down, 3, 3));
}

TEST_CASE("extend_cliques")
{
    SearchConfig c7 = make_config(7, 22270, 22270, CharFilter::fixed(2002));
    const auto cands = candidate_points(22270, 2002, 22270);
    const auto out = extend_cliques(cands, 22270, 2002, c7);
    CHECK(std::find(out.begin(), out.end(), fixtures::heptagon_22270()) != out.end());

    const Integer k2 = pointset_characteristic(fixtures::heptagon_66810());
    const auto out2 = extend_cliques(candidate_points(66810, k2, 66810), 66810, k2, make_config(7, 66810, 66810));
    CHECK(std::find(out2.begin(), out2.end(), fixtures::heptagon_66810()) != out2.end());

    // target 3: every strict triangle over the base, canonicalized
    const long d = 10;
    std::set<std::vector<Integer>> want;
    for (long a = 1; a <= d; ++a)
        for (long b = 1; b <= d; ++b)
            if (a + b > d)
                want.insert(canonical_form(fixtures::triangle(d, a, b)).matrix.upper_vector());
    std::set<std::vector<Integer>> got;
    for (const auto& [k, pts] : candidates_by_characteristic(d, d, CharFilter::any()))
        for (const auto& m : extend_cliques(pts, d, k, make_config(3, d, d)))
            got.insert(m.upper_vector());
    CHECK(got == want);
}

TEST_CASE("extend_cliques is independent of candidate order")
{
    std::mt19937_64 rng(47);
    for (const auto& [d, n] : {std::pair<long, std::size_t>{73, 5}, {174, 6}, {104, 5}}) {
        for (auto [k, pts] : candidates_by_characteristic(d, d, CharFilter::any())) {
            const auto base = extend_cliques(pts, d, k, make_config(n, d, d));
            for (int rep = 0; rep < 2; ++rep) {
                std::shuffle(pts.begin(), pts.end(), rng);
                REQUIRE(extend_cliques(pts, d, k, make_config(n, d, d)) == base);
            }
        }
    }
}

TEST_CASE("search examples")
{
    const auto seven = search_all(make_config(7, 22270, 22270, CharFilter::fixed(2002)));
    REQUIRE(seven.size() == 1);
    CHECK(seven[0].matrix == fixtures::heptagon_22270());
    CHECK(seven[0].characteristic == 2002);

    const auto tri = search_all(make_config(3, 1, 1));
    REQUIRE(tri.size() == 1);
    CHECK(tri[0].matrix == fixtures::triangle(1, 1, 1));

    CHECK(search_all(make_config(6, 1, 173)).empty());
    const auto six = search_all(make_config(6, 174, 174));
    CHECK_FALSE(six.empty());
}

TEST_CASE("minimum_diameter")
{
    CHECK(minimum_diameter(3, 10, CharFilter::any()) == 1);
    CHECK(minimum_diameter(4, 20, CharFilter::any()) == 8);
    CHECK(minimum_diameter(5, 100, CharFilter::any()) == 73);
    CHECK(minimum_diameter(5, 72, CharFilter::any()) == std::nullopt);
}

TEST_CASE("search output is complete for quadrilaterals")
{
    const auto want = oracles::brute_force_quadrilaterals(30);
    const auto got = vectors_of(search_all(make_config(4, 1, 30)));
    CHECK(want.size() > 0);
    CHECK(got == want);
}

TEST_CASE("characteristic filter is conservative")
{
    const auto all = search_all(make_config(4, 1, 30));
    const CharFilter filters[] = {CharFilter::fixed(1), CharFilter::fixed(15), CharFilter::fixed(7),
                                  CharFilter::divisor_of(30), CharFilter::divisor_of(6469693230L)};
    for (const auto& filter : filters) {
        std::vector<FoundSet> post;
        std::copy_if(all.begin(), all.end(), std::back_inserter(post),
                     [&](const FoundSet& f) { return filter.admits(f.characteristic); });
        CHECK(vectors_of(search_all(make_config(4, 1, 30, filter))) == vectors_of(post));
    }
}

TEST_CASE("search results verify and round trip")
{
    for (std::size_t n : {4, 5}) {
        for (const auto& f : search_all(make_config(n, 1, 100))) {
            const auto r = verify(f.matrix);
            REQUIRE(r.passed());
            REQUIRE(r.characteristic == f.characteristic);
            REQUIRE(pointset_characteristic(f.matrix) == f.characteristic);
            REQUIRE(f.matrix(0, 1) == f.diameter);
            REQUIRE(distances_from_embedding(embed(f.matrix)).matrix == f.matrix);
        }
    }
}

TEST_CASE("relaxed and cluster modes")
{
    // 3-4-5 rectangle: no collinear triple, but concyclic
    const auto rect = canonical_form(DistanceMatrix::from_rows(std::vector<std::vector<long>>{
                                         {0, 5, 4, 3}, {5, 0, 3, 4}, {4, 3, 0, 5}, {3, 4, 5, 0}}))
                          .matrix.upper_vector();
    auto relaxed = make_config(4, 5, 5);
    relaxed.require_general_position = false;
    CHECK(vectors_of(search_all(relaxed)).count(rect) == 1);
    CHECK(vectors_of(search_all(make_config(4, 5, 5))).count(rect) == 0);

    auto strict = search_all(make_config(4, 1, 30));
    relaxed = make_config(4, 1, 30);
    relaxed.require_general_position = false;
    const auto loose = vectors_of(search_all(relaxed));
    for (const auto& v : vectors_of(strict))
        CHECK(loose.count(v) == 1);

    auto cluster = make_config(4, 1, 60);
    cluster.cluster_mode = true;
    const auto cl = search_all(cluster);
    CHECK_FALSE(cl.empty());
    for (const auto& f : cl)
        CHECK(f.characteristic == 1);
}

TEST_CASE("partition")
{
    const auto base = make_config(4, 1, 100);
    const auto one = partition(base, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].shard.total == 1);
    CHECK(one[0].d_min == base.d_min);
    CHECK(one[0].d_max == base.d_max);

    const auto four = partition(base, 4);
    REQUIRE(four.size() == 4);
    std::size_t keys = 0;
    for (long d = 1; d <= 100; ++d)
        for (const auto& [k, pts] : candidates_by_characteristic(d, d, CharFilter::any())) {
            int owners = 0;
            for (const auto& s : four)
                owners += shard_owns(s.shard, {d, k}) ? 1 : 0;
            REQUIRE(owners == 1);
            ++keys;
        }
    CHECK(keys > 1000);
    CHECK_THROWS_AS(partition(base, 0), DomainError);
    CHECK_THROWS_AS(partition(four[1], 2), DomainError);

    const auto whole = vectors_of(search_all(make_config(4, 1, 20)));
    std::set<std::vector<Integer>> merged;
    std::size_t total = 0;
    for (const auto& s : partition(make_config(4, 1, 20), 3)) {
        const auto part = search_all(s);
        total += part.size();
        for (const auto& v : vectors_of(part))
            merged.insert(v);
    }
    CHECK(merged == whole);
    CHECK(total == whole.size());
}

TEST_CASE("observer hooks")
{
    std::vector<OuterKey> done;
    SearchObserver obs;
    obs.on_key_done = [&](const OuterKey& k) { done.push_back(k); };
    search(make_config(4, 1, 12), obs);
    CHECK(std::is_sorted(done.begin(), done.end()));
    REQUIRE(done.size() > 10);

    // resuming after the first half reports only the remaining keys' results
    const std::set<OuterKey> first_half(done.begin(), done.begin() + static_cast<long>(done.size() / 2));
    std::vector<FoundSet> resumed;
    SearchObserver again;
    again.skip_key = [&](const OuterKey& k) { return first_half.count(k) == 1; };
    again.on_result = [&](const FoundSet& f) { resumed.push_back(f); };
    search(make_config(4, 1, 12), again);
    for (const auto& f : resumed)
        CHECK(first_half.count({f.diameter, f.characteristic}) == 0);
}

TEST_CASE("config validation")
{
    CHECK_FALSE(make_config(4, 1, 10).validation_error());
    CHECK(make_config(2, 1, 10).validation_error());
    CHECK(make_config(4, 0, 10).validation_error());
    CHECK(make_config(4, 11, 10).validation_error());
    CHECK(make_config(4, 1, kMaxSearchDiameter + 1).validation_error());
    auto c = make_config(4, 1, 10, CharFilter::fixed(2002));
    c.cluster_mode = true;
    CHECK(c.validation_error());
    c = make_config(4, 1, 10);
    c.shard = {3, 3};
    CHECK(c.validation_error());
    CHECK_THROWS_AS(search_all(make_config(4, 11, 10)), DomainError);

    CHECK(CharFilter::parse("any").kind == CharFilter::Kind::Any);
    CHECK(CharFilter::parse("2002").value == 2002);
    CHECK(CharFilter::parse("div:6469693230").kind == CharFilter::Kind::DivisorOf);
    CHECK(CharFilter::parse("div:30").str() == "div:30");
    CHECK_THROWS_AS(CharFilter::parse("12"), DomainError);
    CHECK_THROWS_AS(CharFilter::parse("div:x"), DomainError);
}
