#include "ipset/modular.hpp"

#include "ipset/errors.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace ipset {

namespace {

long norm2(long x, long y)
{
    return x * x + y * y;
}

void set_bit(std::uint64_t* row, std::size_t i)
{
    row[i / 64] |= std::uint64_t{1} << (i % 64);
}

bool any_common(const std::uint64_t* a, const std::uint64_t* b, std::size_t words)
{
    for (std::size_t i = 0; i < words; ++i)
        if ((a[i] & b[i]) != 0)
            return true;
    return false;
}

} // namespace

ModContext::ModContext(int n) : n_(n)
{
    if (n < 2 || n > kMaxModulus)
        throw DomainError("modulus must lie in [2, " + std::to_string(kMaxModulus) + "]");
    const std::size_t cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    words_ = (cells + 63) / 64;
    squares_.assign(static_cast<std::size_t>(n), false);
    radii_.assign(static_cast<std::size_t>(n), false);
    for (long d = 0; d < n; ++d) {
        squares_[static_cast<std::size_t>(d * d % n)] = true;
        if (d != 0)
            radii_[static_cast<std::size_t>(d * d % n)] = true;
    }

    lines_.assign(cells * words_, 0);
    for (int t1 = 0; t1 < n; ++t1)
        for (int t2 = 0; t2 < n; ++t2) {
            const std::size_t dir = index({t1, t2});
            for (long w = 0; w < n; ++w) {
                const ModPoint p{static_cast<int>(w * t1 % n), static_cast<int>(w * t2 % n)};
                set_bit(&lines_[index(p) * words_], dir);
            }
        }

    // |c - d|^2 = |c|^2  <=>  |d|^2 = 2 c.d
    equidistant_.assign(cells * words_, 0);
    radius_mask_.assign(words_, 0);
    for (std::size_t di = 0; di < cells; ++di) {
        const ModPoint d = point(di);
        const long lhs = norm2(d.u, d.v) % n;
        for (std::size_t ci = 0; ci < cells; ++ci) {
            const ModPoint c = point(ci);
            if ((2L * (static_cast<long>(c.u) * d.u + static_cast<long>(c.v) * d.v) - lhs) % n == 0)
                set_bit(&equidistant_[di * words_], ci);
        }
    }
    for (std::size_t ci = 0; ci < cells; ++ci) {
        const ModPoint c = point(ci);
        if (radii_[static_cast<std::size_t>(norm2(c.u, c.v) % n)])
            set_bit(radius_mask_.data(), ci);
    }
}

std::vector<int> ModContext::squares() const
{
    std::vector<int> out;
    for (int r = 0; r < n_; ++r)
        if (squares_[static_cast<std::size_t>(r)])
            out.push_back(r);
    return out;
}

ModPoint ModContext::point(std::size_t index) const
{
    const auto n = static_cast<std::size_t>(n_);
    return {static_cast<int>(index / n), static_cast<int>(index % n)};
}

ModPoint ModContext::difference(const ModPoint& p, const ModPoint& q) const
{
    return {(p.u - q.u + n_) % n_, (p.v - q.v + n_) % n_};
}

void ModContext::require_reduced(const ModPoint& p) const
{
    if (p.u < 0 || p.u >= n_ || p.v < 0 || p.v >= n_)
        throw DomainError("point (" + std::to_string(p.u) + ", " + std::to_string(p.v) + ") not reduced mod " +
                          std::to_string(n_));
}

const std::uint64_t* ModContext::lines_through(const ModPoint& diff) const
{
    return &lines_[index(diff) * words_];
}

const std::uint64_t* ModContext::equidistant(const ModPoint& diff) const
{
    return &equidistant_[index(diff) * words_];
}

bool mod_integral_distance(const ModPoint& p, const ModPoint& q, const ModContext& ctx)
{
    ctx.require_reduced(p);
    ctx.require_reduced(q);
    const ModPoint d = ctx.difference(p, q);
    return ctx.is_square(static_cast<int>(norm2(d.u, d.v) % ctx.modulus()));
}

bool mod_is_collinear(std::span<const ModPoint> points, const ModContext& ctx)
{
    if (points.size() < 2)
        throw DomainError("collinearity needs at least two points");
    for (const auto& p : points)
        ctx.require_reduced(p);
    std::vector<std::uint64_t> acc(ctx.lines_through({0, 0}), ctx.lines_through({0, 0}) + ctx.words());
    for (std::size_t i = 1; i < points.size(); ++i) {
        const std::uint64_t* row = ctx.lines_through(ctx.difference(points[i], points[0]));
        for (std::size_t w = 0; w < ctx.words(); ++w)
            acc[w] &= row[w];
    }
    return std::any_of(acc.begin(), acc.end(), [](std::uint64_t w) { return w != 0; });
}

bool mod_on_circle(const std::array<ModPoint, 4>& points, const ModContext& ctx)
{
    for (const auto& p : points)
        ctx.require_reduced(p);
    std::vector<std::uint64_t> acc(ctx.radius_mask(), ctx.radius_mask() + ctx.words());
    for (std::size_t i = 1; i < 4; ++i) {
        const std::uint64_t* row = ctx.equidistant(ctx.difference(points[i], points[0]));
        for (std::size_t w = 0; w < ctx.words(); ++w)
            acc[w] &= row[w];
    }
    return std::any_of(acc.begin(), acc.end(), [](std::uint64_t w) { return w != 0; });
}

namespace {

class ModCliqueSearch {
public:
    ModCliqueSearch(const ModContext& ctx, std::uint64_t budget) : ctx_(ctx), budget_(budget), words_(ctx.words()) {}

    ModSearchResult run()
    {
        const ModPoint origin{0, 0};
        std::vector<std::size_t> cands;
        const std::size_t cells = static_cast<std::size_t>(ctx_.modulus()) * static_cast<std::size_t>(ctx_.modulus());
        for (std::size_t i = 1; i < cells; ++i)
            if (mod_integral_distance(origin, ctx_.point(i), ctx_))
                cands.push_back(i);
        chosen_.push_back(0);
        best_ = chosen_;
        expand(cands);

        ModSearchResult out;
        out.modulus = ctx_.modulus();
        out.size = best_.size();
        out.lower_bound = exhausted_;
        out.nodes = nodes_;
        for (std::size_t i : best_)
            out.witness.push_back(ctx_.point(i));
        std::sort(out.witness.begin(), out.witness.end());
        return out;
    }

private:
    void expand(const std::vector<std::size_t>& cands)
    {
        for (std::size_t pos = 0; pos < cands.size(); ++pos) {
            if (chosen_.size() + (cands.size() - pos) <= best_.size())
                return;
            if (budget_ != 0 && nodes_ >= budget_) {
                exhausted_ = true;
                return;
            }
            ++nodes_;
            const std::size_t c = cands[pos];
            const ModPoint pc = ctx_.point(c);

            // Constraints every later point must meet relative to c, anchored at c.
            std::vector<const std::uint64_t*> line_rows;
            std::vector<const std::uint64_t*> eq_rows;
            for (std::size_t x : chosen_) {
                const ModPoint d = ctx_.difference(ctx_.point(x), pc);
                line_rows.push_back(ctx_.lines_through(d));
                eq_rows.push_back(ctx_.equidistant(d));
            }
            std::vector<std::uint64_t> pairs;
            for (std::size_t x = 0; x < eq_rows.size(); ++x)
                for (std::size_t y = x + 1; y < eq_rows.size(); ++y)
                    for (std::size_t w = 0; w < words_; ++w)
                        pairs.push_back(ctx_.radius_mask()[w] & eq_rows[x][w] & eq_rows[y][w]);

            std::vector<std::size_t> next;
            for (std::size_t q = pos + 1; q < cands.size(); ++q) {
                const ModPoint pq = ctx_.point(cands[q]);
                if (!mod_integral_distance(pc, pq, ctx_))
                    continue;
                const ModPoint d = ctx_.difference(pq, pc);
                const std::uint64_t* lq = ctx_.lines_through(d);
                const std::uint64_t* eq = ctx_.equidistant(d);
                bool ok = true;
                for (std::size_t x = 0; x < line_rows.size() && ok; ++x)
                    ok = !any_common(lq, line_rows[x], words_);
                for (std::size_t off = 0; off < pairs.size() && ok; off += words_)
                    ok = !any_common(eq, &pairs[off], words_);
                if (ok)
                    next.push_back(cands[q]);
            }

            chosen_.push_back(c);
            if (chosen_.size() > best_.size())
                best_ = chosen_;
            expand(next);
            chosen_.pop_back();
            if (exhausted_)
                return;
        }
    }

    const ModContext& ctx_;
    std::uint64_t budget_;
    std::size_t words_;
    std::vector<std::size_t> chosen_;
    std::vector<std::size_t> best_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

} // namespace

ModSearchResult mod_max_general_position(const ModContext& ctx, std::uint64_t node_budget)
{
    return ModCliqueSearch(ctx, node_budget).run();
}

ModSearchResult mod_max_general_position(int n, std::uint64_t node_budget)
{
    return mod_max_general_position(ModContext(n), node_budget);
}

} // namespace ipset
