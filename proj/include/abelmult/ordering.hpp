#ifndef ABELMULT_ORDERING_HPP
#define ABELMULT_ORDERING_HPP

#include "abelmult/monomial.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace abelmult {

enum class OrderKind { lex, grlex, grevlex };

inline std::string to_string(OrderKind k) {
    switch (k) {
    case OrderKind::lex: return "lex";
    case OrderKind::grlex: return "grlex";
    case OrderKind::grevlex: return "grevlex";
    }
    return "?";
}

inline OrderKind parse_order_kind(std::string_view s) {
    if (s == "lex") return OrderKind::lex;
    if (s == "grlex") return OrderKind::grlex;
    if (s == "grevlex") return OrderKind::grevlex;
    throw std::invalid_argument("unknown monomial ordering '" + std::string(s) + "'");
}

/// Monomial ordering of a given kind over a ranking of the variables.
/// rank[0] is the largest variable; an empty ranking means symbol-list order
/// (alphabetical, first symbol largest).
class MonomialOrdering {
public:
    MonomialOrdering() = default;
    explicit MonomialOrdering(OrderKind kind, std::vector<std::size_t> rank = {})
        : kind_(kind), rank_(std::move(rank)) {}

    /// Ordering with the named symbols ranked last (smallest), in the given
    /// order; useful for lex elimination of everything else.
    static MonomialOrdering with_smallest(OrderKind kind, const SymbolList& syms, const SymbolList& smallest) {
        std::vector<std::size_t> rank;
        std::vector<bool> taken(syms.size(), false);
        std::vector<std::size_t> tail;
        for (const auto& n : smallest) {
            auto i = symbol_index(syms, n);
            if (i == syms.size()) throw std::invalid_argument("ordering: unknown symbol '" + n + "'");
            taken[i] = true;
            tail.push_back(i);
        }
        for (std::size_t i = 0; i < syms.size(); ++i)
            if (!taken[i]) rank.push_back(i);
        rank.insert(rank.end(), tail.begin(), tail.end());
        return MonomialOrdering(kind, std::move(rank));
    }

    OrderKind kind() const { return kind_; }
    const std::vector<std::size_t>& rank() const { return rank_; }

    /// Negative, zero or positive as a <, ==, > b.
    int compare(const Monomial& a, const Monomial& b) const {
        const std::size_t n = a.size();
        if (kind_ != OrderKind::lex && a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        if (kind_ == OrderKind::grevlex) {
            for (std::size_t r = n; r-- > 0;) {
                std::size_t v = var(r);
                if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
            }
            return 0;
        }
        for (std::size_t r = 0; r < n; ++r) {
            std::size_t v = var(r);
            if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
        }
        return 0;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    friend bool operator==(const MonomialOrdering& x, const MonomialOrdering& y) {
        return x.kind_ == y.kind_ && x.rank_ == y.rank_;
    }

private:
    std::size_t var(std::size_t r) const { return rank_.empty() ? r : rank_[r]; }

    OrderKind kind_ = OrderKind::grevlex;
    std::vector<std::size_t> rank_;
};

}  // namespace abelmult

#endif
