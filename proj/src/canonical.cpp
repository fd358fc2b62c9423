#include "ipset/canonical.hpp"

#include <algorithm>
#include <compare>

namespace ipset {

namespace {

class CanonicalSearch {
public:
    explicit CanonicalSearch(const DistanceMatrix& m) : m_(m), n_(m.size()), used_(n_, false) {}

    void run()
    {
        // Column j of the vector holds d(label_0, label_j) .. d(label_{j-1}, label_j);
        // the first label contributes no entries.
        for (std::size_t p = 0; p < n_; ++p) {
            place(p);
            extend();
            unplace();
        }
    }

    CanonicalForm result() const
    {
        std::vector<std::size_t> perm = best_perm_;
        return {m_.permuted(perm), perm};
    }

private:
    // Current partial labeling against the same-length prefix of the best one.
    std::strong_ordering compare_prefix() const
    {
        for (std::size_t j = 1; j < perm_.size(); ++j)
            for (std::size_t i = 0; i < j; ++i) {
                const int c = cmp(m_(perm_[i], perm_[j]), m_(best_perm_[i], best_perm_[j]));
                if (c != 0)
                    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
            }
        return std::strong_ordering::equal;
    }

    std::strong_ordering compare_columns(std::size_t a, std::size_t b) const
    {
        const std::size_t len = perm_.size();
        for (std::size_t i = 0; i < len; ++i) {
            const int c = cmp(m_(perm_[i], a), m_(perm_[i], b));
            if (c != 0)
                return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

    // Depth-first in increasing label order, so the first maximizer reached is
    // the lexicographically smallest permutation among the maximizers.
    void extend()
    {
        if (!best_perm_.empty()) {
            const auto c = compare_prefix();
            if (c < 0)
                return;
            if (perm_.size() == n_) {
                if (c > 0)
                    best_perm_ = perm_;
                return;
            }
        } else if (perm_.size() == n_) {
            best_perm_ = perm_;
            return;
        }
        // Only children whose next column is maximal can lead to a maximizer.
        std::vector<std::size_t> top;
        for (std::size_t p = 0; p < n_; ++p) {
            if (used_[p])
                continue;
            if (top.empty()) {
                top.push_back(p);
                continue;
            }
            const auto c = compare_columns(p, top.front());
            if (c > 0) {
                top.assign(1, p);
            } else if (c == 0) {
                top.push_back(p);
            }
        }
        for (std::size_t p : top) {
            place(p);
            extend();
            unplace();
        }
    }

    void place(std::size_t p)
    {
        perm_.push_back(p);
        used_[p] = true;
    }

    void unplace()
    {
        used_[perm_.back()] = false;
        perm_.pop_back();
    }

    const DistanceMatrix& m_;
    std::size_t n_;
    std::vector<bool> used_;
    std::vector<std::size_t> perm_;
    std::vector<std::size_t> best_perm_;
};

} // namespace

CanonicalForm canonical_form(const DistanceMatrix& m)
{
    m.require_valid();
    if (m.size() == 0)
        return {m, {}};
    CanonicalSearch search(m);
    search.run();
    return search.result();
}

bool is_canonical(const DistanceMatrix& m)
{
    return canonical_form(m).matrix == m;
}

} // namespace ipset
