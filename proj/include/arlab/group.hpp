#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "arlab/errors.hpp"

namespace arlab {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact complex scalar: a pair of rationals.
struct RationalComplex {
    Rational re;
    Rational im;

    RationalComplex() = default;
    RationalComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    explicit RationalComplex(long r) : re(r), im(0) {}

    bool is_zero() const { return re == 0 && im == 0; }
    RationalComplex conj() const { return {re, -im}; }
    // |re| + |im|; an exact surrogate for the modulus, equal to it on reals.
    Rational l1_abs() const;

    friend RationalComplex operator+(const RationalComplex& a, const RationalComplex& b);
    friend RationalComplex operator-(const RationalComplex& a, const RationalComplex& b);
    friend RationalComplex operator*(const RationalComplex& a, const RationalComplex& b);
    friend bool operator==(const RationalComplex& a, const RationalComplex& b);
};

std::string rational_to_string(const Rational& r);           // always "p/q"
Rational rational_from_string(const std::string& s);         // accepts "p/q" and "p"

// --- group elements ---------------------------------------------------------

// Integer matrix (a b; c d) with ad - bc = 1. Entries are arbitrary-precision:
// balls in SL2(Z) grow entries exponentially with the radius.
struct SL2Int {
    Int a, b, c, d;

    SL2Int() : a(1), b(0), c(0), d(1) {}
    SL2Int(Int a_, Int b_, Int c_, Int d_);

    SL2Int inverse() const { return SL2Int(d, -b, -c, a); }
    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
    std::string key() const;

    friend SL2Int operator*(const SL2Int& x, const SL2Int& y);
    friend bool operator==(const SL2Int& x, const SL2Int& y);
};

// 2x2 or 3x3 matrix over Z/N with determinant 1, entries stored in [0, N).
struct ModMat {
    int dim = 2;
    unsigned modulus = 2;
    std::array<unsigned, 9> e{};  // row-major, first dim*dim entries used

    ModMat() { e[0] = e[4] = e[8] = 1; }
    ModMat(int dim_, unsigned modulus_, std::array<unsigned, 9> entries);
    static ModMat identity(int dim, unsigned modulus);

    unsigned at(int i, int j) const { return e[i * dim + j]; }
    unsigned det() const;
    ModMat inverse() const;  // adjugate; valid since det = 1
    bool is_identity() const;
    std::string key() const;

    friend ModMat operator*(const ModMat& x, const ModMat& y);
    friend bool operator==(const ModMat& x, const ModMat& y);
};

// Reduced word over a finite alphabet with formal inverses. Letters are
// +-(i+1) for generator i and its inverse; no adjacent cancelling pair.
struct FreeWord {
    int alphabet = 0;
    std::vector<int> letters;

    FreeWord() = default;
    FreeWord(int alphabet_, std::vector<int> letters_);  // reduces
    static FreeWord generator(int alphabet, int index, int power = 1);

    FreeWord inverse() const;
    bool is_identity() const { return letters.empty(); }
    std::size_t length() const { return letters.size(); }
    std::string key() const;

    friend FreeWord operator*(const FreeWord& x, const FreeWord& y);
    friend bool operator==(const FreeWord& x, const FreeWord& y);
};

using GroupElement = std::variant<SL2Int, ModMat, FreeWord>;

enum class GroupKind { sl2int, modmatrix, freeword };

// Which concrete group the elements of a set / ring / representation live in.
struct GroupContext {
    GroupKind kind = GroupKind::freeword;
    unsigned modulus = 0;  // modmatrix
    int mod_dim = 2;       // modmatrix
    int alphabet = 0;      // freeword

    static GroupContext sl2() { return {GroupKind::sl2int, 0, 2, 0}; }
    static GroupContext mod(unsigned n, int dim = 2) { return {GroupKind::modmatrix, n, dim, 0}; }
    static GroupContext free_group(int k) { return {GroupKind::freeword, 0, 2, k}; }

    GroupElement identity() const;
    std::string header() const;                       // "sl2int" | "modmatrix:N" | "freeword:k"
    static GroupContext from_header(const std::string& h);
    bool matches(const GroupElement& g) const;

    friend bool operator==(const GroupContext& a, const GroupContext& b);
};

GroupElement ge_mul(const GroupElement& x, const GroupElement& y);
GroupElement ge_inverse(const GroupElement& x);
bool ge_is_identity(const GroupElement& x);
std::string ge_key(const GroupElement& x);
bool ge_equal(const GroupElement& x, const GroupElement& y);
GroupElement ge_from_key(const GroupContext& ctx, const std::string& key);

// --- generating sets --------------------------------------------------------

struct GeneratingSet {
    GroupContext ctx;
    std::vector<std::pair<std::string, GroupElement>> generators;  // unique names
    bool symmetric_closure = false;  // declared closed under inverses (as a set)

    void validate() const;
    std::size_t size() const { return generators.size(); }
    const GroupElement& at(std::size_t i) const { return generators[i].second; }
    std::optional<std::size_t> index_of(const std::string& name) const;
    // True if for each generator some generator equals its inverse.
    bool is_symmetric_set() const;
};

// --- group ring -------------------------------------------------------------

// Finitely supported function on group elements with exact rational-complex
// coefficients. Terms are keyed by canonical element form; zero coefficients
// are never stored.
struct GroupRingElement {
    GroupContext ctx;
    std::map<std::string, std::pair<GroupElement, RationalComplex>> terms;

    explicit GroupRingElement(GroupContext c = GroupContext::free_group(0)) : ctx(c) {}

    static GroupRingElement delta(const GroupContext& ctx, const GroupElement& g,
                                  RationalComplex coeff = RationalComplex(1));
    static GroupRingElement zero(const GroupContext& ctx) { return GroupRingElement(ctx); }

    void add_term(const GroupElement& g, const RationalComplex& c);
    bool is_zero() const { return terms.empty(); }
    std::size_t support_size() const { return terms.size(); }
    RationalComplex coeff_at(const GroupElement& g) const;
    Rational l1_norm() const;      // sum of |re| + |im|
    Rational linf_norm() const;    // max of |re| + |im|
    std::vector<GroupElement> support() const;
};

GroupRingElement gr_add(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement gr_sub(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement gr_scale(const RationalComplex& s, const GroupRingElement& a);
// Convolution: (a b)(g) = sum_h a(h) b(h^{-1} g).
GroupRingElement gr_product(const GroupRingElement& a, const GroupRingElement& b);
// a*(g) = conj(a(g^{-1})).
GroupRingElement gr_adjoint(const GroupRingElement& a);
bool gr_equal(const GroupRingElement& a, const GroupRingElement& b);

// Delta_S = 1 - (1/|S|) sum_{s in S} s, for a symmetric generating set. The
// sum runs over the distinct elements of S.
GroupRingElement laplacian(const GeneratingSet& s);

// --- Cayley balls -----------------------------------------------------------

// All elements of word length <= radius over S and its inverses, organized as
// (element, shortest word over generator indices). Deterministic: BFS with
// layers expanded in canonical-key order.
struct BallEntry {
    GroupElement element;
    FreeWord word;  // letters index into the generating set (1-based, signed)
};

std::vector<BallEntry> cayley_ball_entries(const GeneratingSet& s, int radius);
std::vector<GroupElement> cayley_ball(const GeneratingSet& s, int radius);

}  // namespace arlab
