#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "fuzzyfrac/errors.hpp"

namespace fuzzyfrac {

/// Finite fuzzy subset: element -> membership grade in [0, 1].
/// Elements absent from the map have grade 0.
template <class Key = std::string>
class DiscreteFuzzySet {
public:
    using key_type = Key;
    using container = std::map<Key, double>;

    DiscreteFuzzySet() = default;
    DiscreteFuzzySet(std::initializer_list<std::pair<const Key, double>> entries) {
        for (const auto& [k, mu] : entries) set(k, mu);
    }

    void set(const Key& k, double grade) {
        if (!(grade >= 0.0 && grade <= 1.0)) throw DomainError("membership grade outside [0, 1]");
        entries_[k] = grade;
    }

    double grade(const Key& k) const {
        auto it = entries_.find(k);
        return it == entries_.end() ? 0.0 : it->second;
    }

    const container& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    friend bool operator==(const DiscreteFuzzySet&, const DiscreteFuzzySet&) = default;

private:
    container entries_;
};

enum class SetOp { union_, intersection, alg_sum, alg_prod, difference };

namespace detail {
inline double combine_grades(double a, double b, SetOp op) {
    switch (op) {
        case SetOp::union_: return std::max(a, b);
        case SetOp::intersection: return std::min(a, b);
        case SetOp::alg_sum: return a + b - a * b;
        case SetOp::alg_prod: return a * b;
        case SetOp::difference: return std::min(a, 1.0 - b);
    }
    return 0.0;
}
}  // namespace detail

/// Pointwise combination over the union of both key sets.
template <class Key>
DiscreteFuzzySet<Key> combine(const DiscreteFuzzySet<Key>& a, const DiscreteFuzzySet<Key>& b, SetOp op) {
    std::set<Key> universe;
    for (const auto& [k, _] : a.entries()) universe.insert(k);
    for (const auto& [k, _] : b.entries()) universe.insert(k);
    DiscreteFuzzySet<Key> out;
    for (const Key& k : universe) {
        out.set(k, std::clamp(detail::combine_grades(a.grade(k), b.grade(k), op), 0.0, 1.0));
    }
    return out;
}

template <class Key>
DiscreteFuzzySet<Key> complement(const DiscreteFuzzySet<Key>& a) {
    DiscreteFuzzySet<Key> out;
    for (const auto& [k, mu] : a.entries()) out.set(k, 1.0 - mu);
    return out;
}

/// Crisp cut {x : mu(x) >= alpha}, or {x : mu(x) > alpha} when strict.
template <class Key>
std::set<Key> alpha_cut(const DiscreteFuzzySet<Key>& a, double alpha, bool strict = false) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("alpha_cut: alpha must lie in [0, 1]");
    std::set<Key> out;
    for (const auto& [k, mu] : a.entries()) {
        if (strict ? mu > alpha : mu >= alpha) out.insert(k);
    }
    return out;
}

/// Grade of (x, y) is min(mu_a(x), mu_b(y)).
template <class K1, class K2>
DiscreteFuzzySet<std::pair<K1, K2>> cartesian(const DiscreteFuzzySet<K1>& a, const DiscreteFuzzySet<K2>& b) {
    DiscreteFuzzySet<std::pair<K1, K2>> out;
    for (const auto& [x, mx] : a.entries()) {
        for (const auto& [y, my] : b.entries()) out.set({x, y}, std::min(mx, my));
    }
    return out;
}

template <class Key>
double cardinality(const DiscreteFuzzySet<Key>& a) {
    double sum = 0.0;
    for (const auto& [_, mu] : a.entries()) sum += mu;
    return sum;
}

}  // namespace fuzzyfrac
