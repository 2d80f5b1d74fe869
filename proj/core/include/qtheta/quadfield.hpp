#ifndef QTHETA_QUADFIELD_HPP
#define QTHETA_QUADFIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtheta/errors.hpp"

namespace qtheta::quadfield {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

bool is_squarefree(long D);

/// (a + b sqrt(D)) / c in canonical form: c > 0, gcd(a, b, c) = 1.
class QuadElem {
public:
    QuadElem() : a_(0), b_(0), c_(1), D_(5) {}
    QuadElem(Int a, Int b, Int c, long D);
    static QuadElem from_rational(const Rat& r, long D);
    static QuadElem sqrtD(long D) { return QuadElem(0, 1, 1, D); }

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    long D() const { return D_; }

    QuadElem operator+(const QuadElem& o) const;
    QuadElem operator-(const QuadElem& o) const;
    QuadElem operator*(const QuadElem& o) const;
    QuadElem operator-() const { return QuadElem(-a_, -b_, c_, D_); }
    bool operator==(const QuadElem& o) const {
        return D_ == o.D_ && a_ == o.a_ && b_ == o.b_ && c_ == o.c_;
    }

    QuadElem conj() const { return QuadElem(a_, -b_, c_, D_); }
    QuadElem inv() const;
    Rat norm() const;  // (a^2 - D b^2) / c^2
    Rat trace() const; // 2a / c
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }
    Rat rational_part() const { return Rat(a_, c_); }  // coefficient of 1
    Rat surd_part() const { return Rat(b_, c_); }      // coefficient of sqrt(D)

    int sign() const;      // exact sign of a + b sqrt(D)
    int sign_conj() const; // exact sign of a - b sqrt(D)
    bool is_totally_positive() const { return sign() > 0 && sign_conj() > 0; }

    double to_double() const;
    double conj_to_double() const;
    std::string str() const;

private:
    void canonicalize();
    Int a_, b_, c_;
    long D_;
};

/// Fundamental totally positive unit of O_F: the continued-fraction
/// fundamental unit, squared when its norm is -1.
QuadElem fundamental_tp_unit(long D);

struct IdealLattice {
    QuadElem alpha, beta;
    std::string label;
};

struct Character {
    std::string label;
    std::vector<Complex> values; // indexed like ClassData::elements
};

struct ClassData {
    long D = 0;
    std::vector<IdealLattice> ideals;
    std::vector<std::string> elements;     // group element labels; [0] = identity
    std::vector<std::vector<int>> table;   // table[i][j] = index of g_i g_j
    std::vector<Character> characters;
    std::map<std::string, Rat> norms;      // ideal label -> N(f a_i)
    std::optional<QuadElem> nu;
    std::string nu_class;                  // label of [nu]^+_f, when nu present
    std::map<std::string, std::vector<std::pair<Rat, Rat>>> cone_points;
    std::map<std::string, std::string> ideal_of; // element -> ideal label

    int index_of(const std::string& g) const;
    std::string mul(const std::string& g, const std::string& h) const;
    const IdealLattice& ideal_for(const std::string& g) const;
    Rat norm_for(const std::string& g) const;
    QuadElem unit() const { return fundamental_tp_unit(D); }
};

struct ConeRegion {
    std::string label;
    std::vector<std::pair<Rat, Rat>> points; // (x1, x2), 0 < x1 <= 1, 0 <= x2 < 1
};

/// Coordinates of z in the cell frame: z = x * 1 + y * eps, solved exactly on
/// the rational and sqrt(D) components.
std::pair<Rat, Rat> cell_coords(const QuadElem& z, const QuadElem& eps);

/// Does z lie in Z alpha + Z beta? Exact 2x2 solve.
bool in_lattice(const QuadElem& z, const IdealLattice& L);

/// Enumerate R(g). With explicit cone_points configured they are validated
/// (lattice membership + cell ranges) and returned; otherwise the lattice is
/// swept over the preimage of the half-open cell 0 < x <= 1, 0 <= y < 1.
ConeRegion cone_region(const std::string& g, const ClassData& data);

/// The three-case reflection (x1,x2) -> conjugate cell representative.
std::pair<Rat, Rat> minus_bar(const Rat& x1, const Rat& x2);

/// Exact Bernoulli polynomials on rationals.
Rat bernoulli_poly_exact(int n, const Rat& x);

/// Parse and validate a class-data JSON document.
ClassData load_class_data(const std::string& path);
ClassData parse_class_data(const std::string& json_text);

} // namespace qtheta::quadfield

#endif
