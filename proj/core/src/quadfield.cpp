#include "qtheta/quadfield.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qtheta::quadfield {

namespace {

Int gcd3(const Int& a, const Int& b, const Int& c) {
    using boost::multiprecision::gcd;
    return gcd(gcd(abs(a), abs(b)), abs(c));
}

Int floordiv(const Int& n, const Int& d) {
    Int q = n / d, r = n % d;
    if (r != 0 && ((r < 0) != (d < 0))) --q;
    return q;
}

} // namespace

bool is_squarefree(long D) {
    if (D < 1) return false;
    long n = D;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return false;
        }
    }
    return true;
}

QuadElem::QuadElem(Int a, Int b, Int c, long D)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), D_(D) {
    if (D_ <= 1 || !is_squarefree(D_))
        throw DomainError("QuadElem: D must be squarefree and > 1");
    if (c_ == 0) throw DomainError("QuadElem: zero denominator");
    canonicalize();
}

void QuadElem::canonicalize() {
    if (c_ < 0) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
    }
    const Int g = gcd3(a_, b_, c_);
    if (g > 1) {
        a_ /= g;
        b_ /= g;
        c_ /= g;
    }
}

QuadElem QuadElem::from_rational(const Rat& r, long D) {
    return QuadElem(numerator(r), 0, denominator(r), D);
}

QuadElem QuadElem::operator+(const QuadElem& o) const {
    if (D_ != o.D_) throw DomainError("QuadElem: mixed discriminants");
    return QuadElem(a_ * o.c_ + o.a_ * c_, b_ * o.c_ + o.b_ * c_, c_ * o.c_, D_);
}

QuadElem QuadElem::operator-(const QuadElem& o) const { return *this + (-o); }

QuadElem QuadElem::operator*(const QuadElem& o) const {
    if (D_ != o.D_) throw DomainError("QuadElem: mixed discriminants");
    return QuadElem(a_ * o.a_ + Int(D_) * b_ * o.b_, a_ * o.b_ + b_ * o.a_, c_ * o.c_, D_);
}

QuadElem QuadElem::inv() const {
    if (is_zero()) throw DomainError("QuadElem: inverse of zero");
    // 1/x = c (a - b sqrt(D)) / (a^2 - D b^2)
    const Int n = a_ * a_ - Int(D_) * b_ * b_;
    return QuadElem(c_ * a_, -c_ * b_, n, D_);
}

Rat QuadElem::norm() const { return Rat(a_ * a_ - Int(D_) * b_ * b_, c_ * c_); }

Rat QuadElem::trace() const { return Rat(2 * a_, c_); }

int QuadElem::sign() const {
    if (b_ == 0) return a_ == 0 ? 0 : (a_ > 0 ? 1 : -1);
    if (a_ == 0) return b_ > 0 ? 1 : -1;
    if (a_ > 0 && b_ > 0) return 1;
    if (a_ < 0 && b_ < 0) return -1;
    // opposite signs: compare a^2 against D b^2 (never equal, D squarefree)
    const bool dominant_a = a_ * a_ > Int(D_) * b_ * b_;
    return dominant_a == (a_ > 0) ? 1 : -1;
}

int QuadElem::sign_conj() const { return conj().sign(); }

double QuadElem::to_double() const {
    return (a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(double(D_))) /
           c_.convert_to<double>();
}

double QuadElem::conj_to_double() const { return conj().to_double(); }

std::string QuadElem::str() const {
    std::ostringstream os;
    os << "(" << a_ << (b_ < 0 ? "" : "+") << b_ << "*sqrt(" << D_ << "))/" << c_;
    return os.str();
}

QuadElem fundamental_tp_unit(long D) {
    if (D <= 1 || D > 1000000 || !is_squarefree(D))
        throw DomainError("fundamental_tp_unit: D must be squarefree with 1 < D <= 10^6");
    // Continued fraction of the order generator: (1+sqrt(D))/2 when D = 1 mod 4,
    // else sqrt(D). Track surds (P_k + sqrt(D))/Q_k until the pair (P, Q)
    // recurs, then rebuild the stabilising unit from the cycle convergents.
    const Int sq = boost::multiprecision::sqrt(Int(D));
    Int P = (D % 4 == 1) ? 1 : 0;
    Int Q = (D % 4 == 1) ? 2 : 1;
    std::vector<std::pair<Int, Int>> seen;
    std::vector<Int> partials;
    std::size_t cycle_start = 0;
    for (std::size_t k = 0;; ++k) {
        if (k > 100000)
            throw ConsistencyError("fundamental_tp_unit: continued fraction did not close");
        bool found = false;
        for (std::size_t j = 0; j < seen.size(); ++j) {
            if (seen[j].first == P && seen[j].second == Q) {
                cycle_start = j;
                found = true;
                break;
            }
        }
        if (found) break;
        seen.emplace_back(P, Q);
        const Int a = floordiv(P + sq, Q);
        partials.push_back(a);
        P = a * Q - P;
        Q = (Int(D) - P * P) / Q;
    }
    // alpha = (P_j + sqrt(D))/Q_j is purely periodic with partial quotients
    // partials[j..end); the unit is q_{l-1} alpha + q_{l-2}.
    const Int Pj = seen[cycle_start].first;
    const Int Qj = seen[cycle_start].second;
    Int q_prev = 0, q_prev2 = 1; // q_{-1}, q_{-2}
    for (std::size_t k = cycle_start; k < partials.size(); ++k) {
        const Int q = partials[k] * q_prev + q_prev2;
        q_prev2 = q_prev;
        q_prev = q;
    }
    QuadElem eps(q_prev * Pj + q_prev2 * Qj, q_prev, Qj, D);
    const Rat n = eps.norm();
    if (n == -1) eps = eps * eps;
    if (eps.norm() != 1 || !eps.is_totally_positive() || !(eps.to_double() > 1.0))
        throw ConsistencyError("fundamental_tp_unit: cycle unit failed verification");
    return eps;
}

int ClassData::index_of(const std::string& g) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == g) return static_cast<int>(i);
    throw DataError("unknown group element '" + g + "'");
}

std::string ClassData::mul(const std::string& g, const std::string& h) const {
    return elements[table[index_of(g)][index_of(h)]];
}

const IdealLattice& ClassData::ideal_for(const std::string& g) const {
    const auto it = ideal_of.find(g);
    if (it == ideal_of.end())
        throw DataError("no ideal representative assigned to class '" + g + "'");
    for (const auto& L : ideals)
        if (L.label == it->second) return L;
    throw DataError("ideal label '" + it->second + "' not found");
}

Rat ClassData::norm_for(const std::string& g) const {
    const auto it = norms.find(ideal_for(g).label);
    if (it == norms.end())
        throw DataError("no norm configured for ideal of class '" + g + "'");
    return it->second;
}

std::pair<Rat, Rat> cell_coords(const QuadElem& z, const QuadElem& eps) {
    if (eps.surd_part() == 0)
        throw DomainError("cell_coords: frame vector eps is rational");
    const Rat y = z.surd_part() / eps.surd_part();
    const Rat x = z.rational_part() - y * eps.rational_part();
    return {x, y};
}

bool in_lattice(const QuadElem& z, const IdealLattice& L) {
    const Rat ar = L.alpha.rational_part(), as = L.alpha.surd_part();
    const Rat br = L.beta.rational_part(), bs = L.beta.surd_part();
    const Rat det = ar * bs - as * br;
    if (det == 0) throw DataError("in_lattice: degenerate lattice basis");
    const Rat zr = z.rational_part(), zs = z.surd_part();
    const Rat m = (zr * bs - zs * br) / det;
    const Rat n = (ar * zs - as * zr) / det;
    return denominator(m) == 1 && denominator(n) == 1;
}

namespace {

bool in_cell(const Rat& x, const Rat& y) {
    return x > 0 && x <= 1 && y >= 0 && y < 1;
}

} // namespace

ConeRegion cone_region(const std::string& g, const ClassData& data) {
    data.index_of(g);
    const QuadElem eps = fundamental_tp_unit(data.D);
    const IdealLattice& L = data.ideal_for(g);

    if (!data.cone_points.empty()) {
        const auto it = data.cone_points.find(g);
        if (it == data.cone_points.end())
            throw DataError("cone point assignment missing class '" + g + "'");
        for (const auto& [x, y] : it->second) {
            if (!in_cell(x, y))
                throw DataError("cone point outside the half-open cell for '" + g + "'");
            const QuadElem z = QuadElem::from_rational(x, data.D) +
                               QuadElem::from_rational(y, data.D) * eps;
            if (!in_lattice(z, L))
                throw DataError("cone point not in the configured lattice for '" + g + "'");
        }
        return ConeRegion{g, it->second};
    }

    if (data.elements.size() > 1)
        throw DataError("cone_region: multi-class data requires an explicit "
                        "cone point assignment");

    // Sweep the lattice over the preimage of the unit cell in the (x, y) frame.
    const auto [xa, ya] = cell_coords(L.alpha, eps);
    const auto [xb, yb] = cell_coords(L.beta, eps);
    const Rat det = xa * yb - ya * xb;
    if (det == 0) throw DataError("cone_region: degenerate lattice basis");
    long mlo = 0, mhi = 0, nlo = 0, nhi = 0;
    bool first = true;
    for (int cx = 0; cx <= 1; ++cx) {
        for (int cy = 0; cy <= 1; ++cy) {
            const Rat m = (Rat(cx) * yb - Rat(cy) * xb) / det;
            const Rat n = (xa * Rat(cy) - ya * Rat(cx)) / det;
            const double md = numerator(m).convert_to<double>() /
                              denominator(m).convert_to<double>();
            const double nd = numerator(n).convert_to<double>() /
                              denominator(n).convert_to<double>();
            const long ml = static_cast<long>(std::floor(md)) - 1;
            const long mh = static_cast<long>(std::ceil(md)) + 1;
            const long nl = static_cast<long>(std::floor(nd)) - 1;
            const long nh = static_cast<long>(std::ceil(nd)) + 1;
            if (first) {
                mlo = ml;
                mhi = mh;
                nlo = nl;
                nhi = nh;
                first = false;
            } else {
                mlo = std::min(mlo, ml);
                mhi = std::max(mhi, mh);
                nlo = std::min(nlo, nl);
                nhi = std::max(nhi, nh);
            }
        }
    }
    ConeRegion R{g, {}};
    for (long m = mlo; m <= mhi; ++m) {
        for (long n = nlo; n <= nhi; ++n) {
            const Rat x = Rat(m) * xa + Rat(n) * xb;
            const Rat y = Rat(m) * ya + Rat(n) * yb;
            if (in_cell(x, y)) R.points.emplace_back(x, y);
        }
    }
    std::sort(R.points.begin(), R.points.end());
    return R;
}

std::pair<Rat, Rat> minus_bar(const Rat& x1, const Rat& x2) {
    if (x2 == 0 && x1 > 0 && x1 < 1) return {1 - x1, Rat(0)};
    if (x1 > 0 && x1 < 1 && x2 > 0 && x2 < 1) return {1 - x1, 1 - x2};
    if (x1 == 1 && x2 > 0 && x2 < 1) return {Rat(1), 1 - x2};
    throw DomainError("minus_bar: point outside the three reflection cases");
}

Rat bernoulli_poly_exact(int n, const Rat& x) {
    if (n == 1) return x - Rat(1, 2);
    if (n == 2) return x * x - x + Rat(1, 6);
    throw DomainError("bernoulli_poly_exact: degree must be 1 or 2");
}

} // namespace qtheta::quadfield
