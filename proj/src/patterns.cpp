#include "severi/patterns.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace severi {

MultiplicityPattern::MultiplicityPattern(std::vector<long> parts) : parts_(std::move(parts)) {
    for (long p : parts_)
        if (p < 1) throw std::invalid_argument("pattern parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

long MultiplicityPattern::degree() const {
    long s = 0;
    for (long p : parts_) s += p;
    return s;
}

MultiplicityPattern MultiplicityPattern::nodal(long d, long nu) {
    if (nu < 0 || 2 * nu > d) throw std::invalid_argument("m(d,nu) needs 0 <= 2nu <= d");
    std::vector<long> parts(static_cast<std::size_t>(nu), 2);
    parts.insert(parts.end(), static_cast<std::size_t>(d - 2 * nu), 1);
    return MultiplicityPattern(std::move(parts));
}

std::string MultiplicityPattern::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ")";
    return os.str();
}

namespace {

// Enumerates every partition of {0..l-1} into blocks, calling sink with the
// block-sum multiset (sorted non-increasing). Degrees in scope are tiny.
void for_each_merge(const std::vector<long>& parts,
                    const std::function<void(std::vector<long>)>& sink) {
    const std::size_t l = parts.size();
    std::vector<long> block_of(l, -1);
    std::vector<long> sums;
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long nblocks) {
        if (i == l) {
            std::vector<long> s(sums.begin(), sums.begin() + nblocks);
            std::sort(s.begin(), s.end(), std::greater<>());
            sink(std::move(s));
            return;
        }
        for (long b = 0; b <= nblocks; ++b) {
            const bool fresh = (b == nblocks);
            if (fresh) sums.push_back(0);
            sums[static_cast<std::size_t>(b)] += parts[i];
            block_of[i] = b;
            rec(i + 1, nblocks + (fresh ? 1 : 0));
            sums[static_cast<std::size_t>(b)] -= parts[i];
            if (fresh) sums.pop_back();
        }
    };
    rec(0, 0);
}

}  // namespace

bool is_degeneration(const MultiplicityPattern& m_prime, const MultiplicityPattern& m) {
    if (m_prime.degree() != m.degree()) return false;
    if (m_prime.length() > m.length()) return false;
    bool found = false;
    for_each_merge(m.parts(), [&](std::vector<long> sums) {
        if (!found && sums == m_prime.parts()) found = true;
    });
    return found;
}

std::set<MultiplicityPattern> strict_degenerations(const MultiplicityPattern& m) {
    std::set<MultiplicityPattern> out;
    for_each_merge(m.parts(), [&](std::vector<long> sums) {
        if (static_cast<long>(sums.size()) < m.length())
            out.insert(MultiplicityPattern(std::move(sums)));
    });
    return out;
}

RationalPoly viete(const std::vector<Rat>& roots) {
    return poly_from_roots(roots);
}

long stratum_dimension(const MultiplicityPattern& m) {
    return m.length();
}

PatternReport pattern_of(const RationalPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("pattern of the zero polynomial");
    if (p.leading() != 1) throw std::invalid_argument("pattern_of expects a monic polynomial");
    PatternReport rep;
    std::vector<long> parts;
    if (p.is_constant()) {
        rep.pattern = MultiplicityPattern{};
        return rep;
    }
    for (const auto& [mult, factor] : p.square_free_decomposition()) {
        auto rs = factor.rational_roots();
        parts.insert(parts.end(), rs.roots.size(), mult);
        if (rs.cofactor.degree() >= 1) {
            rep.complete = false;
            rep.unresolved.emplace_back(mult, rs.cofactor.degree());
        }
    }
    rep.pattern = MultiplicityPattern(std::move(parts));
    return rep;
}

std::string PatternReport::str() const {
    std::ostringstream os;
    os << pattern.str();
    if (!complete) {
        os << " + unresolved{";
        for (std::size_t i = 0; i < unresolved.size(); ++i)
            os << (i ? ", " : "") << "mult " << unresolved[i].first << " deg "
               << unresolved[i].second;
        os << "}";
    }
    return os.str();
}

}  // namespace severi
