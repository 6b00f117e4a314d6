#include "novikov/detector.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace nov {

namespace {

using Row = std::vector<TruncatedSeries>;
using SeriesMat = std::vector<Row>;  // rows x cols

struct SeriesComplex {
    RingFlavor flavor;
    int window = 0;
    std::map<int, int> ranks;
    std::map<int, SeriesMat> d;  // d[n] : rank(n+1) x rank(n)

    int rank(int n) const {
        auto it = ranks.find(n);
        return it == ranks.end() ? 0 : it->second;
    }
    TruncatedSeries zero() const { return TruncatedSeries(flavor, window, LaurentPoly()); }
    const TruncatedSeries* entry(int n, int i, int j) const {
        auto it = d.find(n);
        if (it == d.end()) return nullptr;
        return &it->second[i][j];
    }
    bool empty() const {
        for (const auto& [n, r] : ranks)
            if (r > 0) return false;
        return true;
    }
    int euler() const {
        int e = 0;
        for (const auto& [n, r] : ranks) e += (n % 2 == 0 ? r : -r);
        return e;
    }
};

SeriesComplex lift(const FreeComplex& c, const RingFlavor& f, int window) {
    SeriesComplex s;
    s.flavor = f;
    s.window = window;
    for (int n : c.degrees()) s.ranks[n] = c.rank(n);
    for (int n : c.degrees()) {
        if (c.rank(n + 1) == 0) continue;
        PolyMat m = c.d(n);
        SeriesMat sm(m.rows(), Row(m.cols()));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) sm[i][j] = TruncatedSeries(f, window, m(i, j));
        s.d[n] = std::move(sm);
    }
    return s;
}

enum class Status { Zero, NonUnit, Unit, Unknown };

struct EntryTest {
    Status status = Status::Unknown;
    Monomial leading;
};

EntryTest test_entry(const TruncatedSeries& e) {
    EntryTest t;
    bool exact = e.precision() == TruncatedSeries::kExact;
    if (e.terms().is_zero()) {
        t.status = exact ? Status::Zero : Status::Unknown;
        return t;
    }
    UnitAnswer u = is_unit(e.flavor(), e.terms());
    t.leading = u.leading;
    t.status = u.unit ? Status::Unit : Status::NonUnit;
    return t;
}

TruncatedSeries inverse(const TruncatedSeries& u, Monomial lead) {
    TruncatedSeries inv = invert(u.flavor(), u.terms(), u.window());
    if (u.precision() == TruncatedSeries::kExact) return inv;
    return inv.truncated(u.precision() - 2 * u.valuation(lead), inv.weights());
}

// splits off the summand at (a, b) of d^n
void split(SeriesComplex& s, int n, int a, int b, Monomial lead) {
    SeriesMat& dn = s.d.at(n);
    int rows = s.rank(n + 1), cols = s.rank(n);
    if (rows > 1 && cols > 1) {
        TruncatedSeries minus_inv = TruncatedSeries(s.flavor, s.window, LaurentPoly(-1)) * inverse(dn[a][b], lead);
        SeriesMat next;
        for (int i = 0; i < rows; ++i) {
            if (i == a) continue;
            Row r;
            TruncatedSeries left = dn[i][b] * minus_inv;
            for (int j = 0; j < cols; ++j) {
                if (j == b) continue;
                r.push_back(dn[i][j] + left * dn[a][j]);
            }
            next.push_back(std::move(r));
        }
        dn = std::move(next);
    } else {
        s.d.erase(n);
    }
    if (auto it = s.d.find(n - 1); it != s.d.end()) {
        it->second.erase(it->second.begin() + b);
        if (it->second.empty()) s.d.erase(it);
    }
    if (auto it = s.d.find(n + 1); it != s.d.end()) {
        for (Row& r : it->second) r.erase(r.begin() + a);
        if (it->second.front().empty()) s.d.erase(it);
    }
    s.ranks[n] = cols - 1;
    s.ranks[n + 1] = rows - 1;
    if (cols - 1 == 0) s.ranks.erase(n);
    if (rows - 1 == 0) s.ranks.erase(n + 1);
}

bool square_zero(const SeriesComplex& s) {
    for (const auto& [n, a] : s.d) {
        auto nx = s.d.find(n + 1);
        if (nx == s.d.end()) continue;
        const SeriesMat& b = nx->second;
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j < a.front().size(); ++j) {
                TruncatedSeries acc = s.zero();
                for (std::size_t k = 0; k < a.size(); ++k) acc = acc + b[i][k] * a[k][j];
                if (!acc.in_box(acc.guaranteed_radius()).is_zero()) return false;
            }
    }
    return true;
}

int entry_radius(const TruncatedSeries& e) {
    int r = e.guaranteed_radius();
    return r < 0 ? 0 : r;
}

}  // namespace

std::string outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Contractible: return "Contractible";
        case Outcome::NonAcyclic: return "NonAcyclic";
        default: return "Inconclusive";
    }
}

std::string overall_name(Overall o) {
    switch (o) {
        case Overall::FinitelyDominated: return "FinitelyDominated";
        case Overall::NotFinitelyDominated: return "NotFinitelyDominated";
        default: return "Inconclusive";
    }
}

FlavorVerdict eliminate(const FreeComplex& c, const RingFlavor& f, int window) {
    FlavorVerdict v;
    v.flavor = f;
    v.window = window;
    v.radius = window;
    SeriesComplex s = lift(c, f, window);
    while (!s.empty()) {
        std::optional<std::tuple<Monomial, int, int, int>> best;
        bool unknown = false;
        for (const auto& [n, m] : s.d)
            for (int i = 0; i < int(m.size()); ++i)
                for (int j = 0; j < int(m[i].size()); ++j) {
                    EntryTest t = test_entry(m[i][j]);
                    if (t.status == Status::Unknown) unknown = true;
                    if (t.status != Status::Unit) continue;
                    auto key = std::make_tuple(t.leading, n, i, j);
                    if (!best || key < *best) best = key;
                }
        if (!best) {
            for (const auto& [n, r] : s.ranks) v.ranks[n] = r;
            bool small = std::all_of(s.ranks.begin(), s.ranks.end(), [](const auto& p) { return p.second <= 1; });
            if (s.euler() != 0) {
                v.outcome = Outcome::NonAcyclic;
                v.detail = "Euler characteristic " + std::to_string(s.euler());
            } else if (unknown) {
                throw WindowTooSmall("no visible unit and an entry below the guaranteed radius in " + f.name());
            } else if (small) {
                v.outcome = Outcome::NonAcyclic;
                v.detail = "rank one in every degree and no unit entry";
                for (const auto& [n, m] : s.d)
                    if (!m[0][0].terms().is_zero()) v.detail += "; d^" + std::to_string(n) + " = " + m[0][0].terms().str();
            } else {
                v.outcome = Outcome::Inconclusive;
                v.detail = "no unit entry";
            }
            return v;
        }
        auto [lead, n, i, j] = *best;
        const TruncatedSeries& e = s.d.at(n)[i][j];
        v.pivots.push_back({n, i, j, lead, e.terms()});
        v.radius = std::min(v.radius, entry_radius(e));
        split(s, n, i, j, lead);
    }
    v.outcome = Outcome::Contractible;
    return v;
}

bool replay(const FreeComplex& c, const FlavorVerdict& v) {
    if (v.outcome != Outcome::Contractible) return false;
    SeriesComplex s = lift(c, v.flavor, v.window);
    if (!square_zero(s)) return false;
    for (const Pivot& p : v.pivots) {
        const TruncatedSeries* e = s.entry(p.degree, p.row, p.col);
        if (!e) return false;
        EntryTest t = test_entry(*e);
        if (t.status != Status::Unit || !(t.leading == p.leading)) return false;
        split(s, p.degree, p.row, p.col, t.leading);
        if (!square_zero(s)) return false;
    }
    return s.empty();
}

DominationReport check_finite_domination(const FreeComplex& c, int window) {
    DominationReport r;
    r.window = window;
    for (const RingFlavor& f : detection_flavors()) {
        FlavorVerdict v;
        try {
            v = eliminate(c, f, window);
        } catch (const WindowTooSmall& e) {
            v.flavor = f;
            v.window = window;
            v.outcome = Outcome::Inconclusive;
            v.detail = e.what();
        }
        r.flavors.push_back(v);
    }
    bool all = true;
    for (const auto& v : r.flavors) {
        if (v.outcome == Outcome::NonAcyclic && !r.failing) r.failing = v.flavor;
        if (v.outcome != Outcome::Contractible) all = false;
    }
    if (r.failing)
        r.overall = Overall::NotFinitelyDominated;
    else
        r.overall = all ? Overall::FinitelyDominated : Overall::Inconclusive;
    return r;
}

bool Witness::passed() const {
    return std::all_of(transcript.begin(), transcript.end(), [](const auto& t) { return t.second; });
}

Witness witness(const FreeComplex& c) {
    Witness w;
    w.bprime = build_Bprime(c);
    w.homology = homology_all(w.bprime.complex);
    w.transcript.push_back({"d^2 = 0 on B'", validate(w.bprime.complex).ok});
    w.transcript.push_back({"chi is a chain map", is_chain_map(w.bprime.chi)});
    std::set<int> ks;
    for (const auto& [t, k] : w.bprime.ext.k) ks.insert(k);
    for (int k : ks) {
        WindowVerdict wv = graded_scan(augmented_row(k), k + 2);
        w.transcript.push_back({"row exactness k = " + std::to_string(k), wv.exact()});
    }
    return w;
}

}  // namespace nov
