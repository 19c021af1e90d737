#include "lorenz/linkring.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lorenz/cycles.hpp"
#include "lorenz/errors.hpp"

namespace lorenz {

Necklace canonical_necklace(std::string_view word) {
    if (word.empty()) throw EmptyWord("necklace word must be nonempty");
    for (char c : word)
        if (c != 'L' && c != 'R')
            throw MalformedWord("necklace letters must be L or R");
    std::string best(word);
    std::string rot(word);
    for (std::size_t k = 1; k < word.size(); ++k) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return best;
}

namespace {

std::size_t multiset_degree(const NecklaceMultiset& m) {
    std::size_t d = 0;
    for (const auto& n : m) d += n.size();
    return d;
}

void sort_multiset(NecklaceMultiset& m) {
    std::sort(m.begin(), m.end(), NecklaceOrder{});
}

} // namespace

bool LinkRingElement::TermOrder::operator()(const NecklaceMultiset& a,
                                            const NecklaceMultiset& b) const {
    std::size_t da = multiset_degree(a), db = multiset_degree(b);
    if (da != db) return da < db;
    if (a.size() != b.size()) return a.size() < b.size();
    NecklaceOrder less;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (less(a[i], b[i])) return true;
        if (less(b[i], a[i])) return false;
    }
    return false;
}

LinkRingElement LinkRingElement::one() {
    LinkRingElement e;
    e.add_term({}, Rational(1));
    return e;
}

void LinkRingElement::add_term(NecklaceMultiset necklaces,
                               const Rational& coef) {
    if (coef == Rational(0)) return;
    sort_multiset(necklaces);
    auto it = terms_.find(necklaces);
    if (it == terms_.end()) {
        terms_.emplace(std::move(necklaces), coef);
    } else {
        it->second += coef;
        if (it->second == Rational(0)) terms_.erase(it);
    }
}

bool LinkRingElement::has_integer_coefficients() const {
    for (const auto& [m, c] : terms_)
        if (!is_integer(c)) return false;
    return true;
}

LinkRingElement LinkRingElement::operator+(const LinkRingElement& o) const {
    LinkRingElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

LinkRingElement LinkRingElement::operator-(const LinkRingElement& o) const {
    LinkRingElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

LinkRingElement LinkRingElement::operator*(const LinkRingElement& o) const {
    LinkRingElement r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            NecklaceMultiset m = m1;
            m.insert(m.end(), m2.begin(), m2.end());
            r.add_term(std::move(m), c1 * c2);
        }
    return r;
}

LinkRingElement LinkRingElement::scaled(const Rational& c) const {
    LinkRingElement r;
    for (const auto& [m, coef] : terms_) r.add_term(m, coef * c);
    return r;
}

LinkRingElement LinkRingElement::truncated(std::size_t max_degree) const {
    LinkRingElement r;
    for (const auto& [m, c] : terms_)
        if (multiset_degree(m) <= max_degree) r.add_term(m, c);
    return r;
}

std::string LinkRingElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = c < Rational(0) ? -c : c;
        if (first) {
            if (c < Rational(0)) out << "-";
            first = false;
        } else {
            out << (c < Rational(0) ? " - " : " + ");
        }
        if (mag != Rational(1) || m.empty()) out << rational_str(mag);
        for (const auto& n : m) out << "(" << n << ")";
    }
    return out.str();
}

std::string LinkRingElement::to_json() const {
    nlohmann::json j;
    j["terms"] = nlohmann::json::array();
    for (const auto& [m, c] : terms_) {
        nlohmann::json term;
        if (is_integer(c)) {
            term["coef"] = c.numerator().str();
        } else {
            term["coef"] = rational_str(c);
        }
        term["necklaces"] = m;
        j["terms"].push_back(term);
    }
    return j.dump();
}

namespace {

std::string cycle_word(const TemplateModel& t,
                       const std::vector<std::size_t>& cycle) {
    std::string w;
    for (std::size_t k = 0; k < cycle.size(); ++k)
        w.push_back(to_char(t.labels[cycle[k]][cycle[(k + 1) % cycle.size()]]));
    return w;
}

std::uint64_t node_mask(const std::vector<std::size_t>& cycle) {
    std::uint64_t m = 0;
    for (std::size_t v : cycle) m |= std::uint64_t(1) << v;
    return m;
}

void disjoint_families(const std::vector<std::uint64_t>& masks,
                       const std::vector<Necklace>& necks, std::size_t from,
                       std::uint64_t used, NecklaceMultiset& current,
                       LinkRingElement& out) {
    out.add_term(current, Rational(current.size() % 2 == 0 ? 1 : -1));
    for (std::size_t i = from; i < masks.size(); ++i) {
        if (masks[i] & used) continue;
        current.push_back(necks[i]);
        disjoint_families(masks, necks, i + 1, used | masks[i], current, out);
        current.pop_back();
    }
}

} // namespace

LinkRingElement link_det(const TemplateModel& t, std::size_t cycle_budget) {
    if (t.cell_count() > 64)
        throw BoundTooLarge("link_det supports at most 64 cells");
    auto cycles = simple_cycles(t.transition, cycle_budget);
    std::vector<std::uint64_t> masks;
    std::vector<Necklace> necks;
    for (const auto& c : cycles) {
        masks.push_back(node_mask(c));
        necks.push_back(canonical_necklace(cycle_word(t, c)));
    }
    LinkRingElement out;
    NecklaceMultiset current;
    disjoint_families(masks, necks, 0, 0, current, out);
    return out;
}

LinkRingElement star_substitute(const KneadingPair& p,
                                const LinkRingElement& e) {
    std::string pat_x, pat_y;
    for (Letter l : p.x.letters()) pat_x.push_back(to_char(l));
    for (Letter l : p.y.letters()) pat_y.push_back(to_char(l));
    LinkRingElement out;
    for (const auto& [m, c] : e.terms()) {
        NecklaceMultiset sub;
        for (const auto& n : m) {
            std::string w;
            for (char ch : n) w += (ch == 'L' ? pat_x : pat_y);
            sub.push_back(canonical_necklace(w));
        }
        out.add_term(std::move(sub), c);
    }
    return out;
}

namespace {

// Projects a based closed walk to the multiset of simple cycles it
// traverses: scanning the node path with a stack, every return to a node
// already on the stack closes one simple cycle (a walk w^k yields k copies
// of the necklace of w; a figure-eight walk splits into its two lobes).
NecklaceMultiset walk_cycle_multiset(const std::vector<std::size_t>& path,
                                     const std::string& word) {
    NecklaceMultiset out;
    std::vector<std::size_t> nodes{path[0]};
    std::vector<char> in_label{'?'}; // label of the edge into each entry
    for (std::size_t k = 1; k < path.size(); ++k) {
        std::size_t v = path[k];
        char l = word[k - 1];
        auto it = std::find(nodes.begin(), nodes.end(), v);
        if (it == nodes.end()) {
            nodes.push_back(v);
            in_label.push_back(l);
            continue;
        }
        std::size_t j = static_cast<std::size_t>(it - nodes.begin());
        std::string cyc;
        for (std::size_t m = j + 1; m < nodes.size(); ++m)
            cyc.push_back(in_label[m]);
        cyc.push_back(l);
        out.push_back(canonical_necklace(cyc));
        nodes.resize(j + 1);
        in_label.resize(j + 1);
    }
    return out;
}

// Label words of all closed walks of the given length, one per base node,
// each projected onto its simple-cycle multiset.
void closed_walks(const TemplateModel& t, std::size_t length,
                  std::size_t start, std::size_t node, std::string& word,
                  std::vector<std::size_t>& path,
                  std::map<NecklaceMultiset, Int>& out) {
    if (word.size() == length) {
        if (node == start) {
            NecklaceMultiset m = walk_cycle_multiset(path, word);
            std::sort(m.begin(), m.end(), NecklaceOrder{});
            out[std::move(m)] += 1;
        }
        return;
    }
    for (std::size_t next = 0; next < t.cell_count(); ++next) {
        if (!t.transition[node][next]) continue;
        word.push_back(to_char(t.labels[node][next]));
        path.push_back(next);
        closed_walks(t, length, start, next, word, path, out);
        path.pop_back();
        word.pop_back();
    }
}

} // namespace

LinkRingElement exp_trace_series(const TemplateModel& t,
                                 std::size_t max_degree) {
    // S = -sum_i tr(A(L,R)^i)/i, graded by total letter count.
    LinkRingElement s;
    for (std::size_t i = 1; i <= max_degree; ++i) {
        std::map<NecklaceMultiset, Int> trace;
        std::string word;
        std::vector<std::size_t> path;
        for (std::size_t start = 0; start < t.cell_count(); ++start) {
            path.assign(1, start);
            closed_walks(t, i, start, start, word, path, trace);
        }
        for (auto& [m, count] : trace)
            s.add_term(m, Rational(-count, Int(i)));
    }
    // exp(S) = sum_k S^k / k!, truncated by degree.
    LinkRingElement result = LinkRingElement::one();
    LinkRingElement power = LinkRingElement::one();
    Rational factorial(1);
    for (std::size_t k = 1; k <= max_degree && !power.is_zero(); ++k) {
        power = (power * s).truncated(max_degree);
        factorial *= Rational(Int(k));
        result = result + power.scaled(Rational(1) / factorial);
    }
    if (!result.has_integer_coefficients())
        throw NonIntegerCoefficient(
            "exp-trace series left non-integer coefficients: " + result.str());
    return result;
}

BiPoly abelianize(const LinkRingElement& e) {
    if (!e.has_integer_coefficients())
        throw NonIntegerCoefficient("abelianize needs integer coefficients");
    BiPoly out;
    for (const auto& [m, c] : e.terms()) {
        int ue = 0, ve = 0;
        for (const auto& n : m)
            for (char ch : n) (ch == 'L' ? ue : ve)++;
        out = out + BiPoly::monomial(c.numerator(), ue, ve);
    }
    return out;
}

WilliamsReport verify_williams_factorization(const KneadingPair& outer,
                                             const KneadingPair& inner,
                                             std::size_t cycle_budget) {
    WilliamsReport r;
    KneadingPair product = star_pair(outer, inner);
    r.lhs = link_det(build_template(product), cycle_budget);
    LinkRingElement outer_det = link_det(build_template(outer), cycle_budget);
    LinkRingElement inner_det = link_det(build_template(inner), cycle_budget);
    r.rhs = outer_det * star_substitute(outer, inner_det);
    r.pass = r.lhs == r.rhs;
    return r;
}

} // namespace lorenz
