#include "arlab/group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace arlab {

// --- RationalComplex --------------------------------------------------------

Rational RationalComplex::l1_abs() const {
    return boost::multiprecision::abs(re) + boost::multiprecision::abs(im);
}

RationalComplex operator+(const RationalComplex& a, const RationalComplex& b) {
    return {a.re + b.re, a.im + b.im};
}
RationalComplex operator-(const RationalComplex& a, const RationalComplex& b) {
    return {a.re - b.re, a.im - b.im};
}
RationalComplex operator*(const RationalComplex& a, const RationalComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
bool operator==(const RationalComplex& a, const RationalComplex& b) {
    return a.re == b.re && a.im == b.im;
}

std::string rational_to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_from_string(const std::string& s) {
    auto pos = s.find('/');
    try {
        if (pos == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, pos));
        Int den(s.substr(pos + 1));
        if (den == 0) throw validation_error("rational: zero denominator in '" + s + "'");
        return Rational(num, den);
    } catch (const std::exception& e) {
        throw validation_error("rational: cannot parse '" + s + "'");
    }
}

// --- SL2Int -----------------------------------------------------------------

SL2Int::SL2Int(Int a_, Int b_, Int c_, Int d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (a * d - b * c != 1) throw validation_error("sl2int: determinant must be 1");
}

std::string SL2Int::key() const {
    return a.str() + "," + b.str() + "," + c.str() + "," + d.str();
}

SL2Int operator*(const SL2Int& x, const SL2Int& y) {
    SL2Int r;
    r.a = x.a * y.a + x.b * y.c;
    r.b = x.a * y.b + x.b * y.d;
    r.c = x.c * y.a + x.d * y.c;
    r.d = x.c * y.b + x.d * y.d;
    return r;
}

bool operator==(const SL2Int& x, const SL2Int& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

// --- ModMat -----------------------------------------------------------------

ModMat::ModMat(int dim_, unsigned modulus_, std::array<unsigned, 9> entries)
    : dim(dim_), modulus(modulus_), e(entries) {
    if (dim != 2 && dim != 3) throw validation_error("modmat: dimension must be 2 or 3");
    if (modulus < 2) throw validation_error("modmat: modulus must be >= 2");
    for (int i = 0; i < dim * dim; ++i) e[i] %= modulus;
    for (int i = dim * dim; i < 9; ++i) e[i] = 0;
    if (det() != 1 % modulus) throw validation_error("modmat: determinant must be 1 mod N");
}

ModMat ModMat::identity(int dim, unsigned modulus) {
    std::array<unsigned, 9> id{};
    for (int i = 0; i < dim; ++i) id[i * dim + i] = 1;
    return ModMat(dim, modulus, id);
}

unsigned ModMat::det() const {
    const unsigned long long n = modulus;
    auto m = [&](int i, int j) -> unsigned long long { return at(i, j); };
    if (dim == 2) {
        unsigned long long pos = m(0, 0) * m(1, 1) % n;
        unsigned long long neg = m(0, 1) * m(1, 0) % n;
        return unsigned((pos + n - neg) % n);
    }
    unsigned long long pos =
        (m(0, 0) * m(1, 1) % n * m(2, 2) + m(0, 1) * m(1, 2) % n * m(2, 0) +
         m(0, 2) * m(1, 0) % n * m(2, 1)) %
        n;
    unsigned long long neg =
        (m(0, 2) * m(1, 1) % n * m(2, 0) + m(0, 0) * m(1, 2) % n * m(2, 1) +
         m(0, 1) * m(1, 0) % n * m(2, 2)) %
        n;
    return unsigned((pos + 3 * n * n - neg) % n);
}

ModMat ModMat::inverse() const {
    const long long n = modulus;
    auto m = [&](int i, int j) -> long long { return at(i, j); };
    auto norm = [&](long long v) -> unsigned { return unsigned(((v % n) + n) % n); };
    std::array<unsigned, 9> r{};
    if (dim == 2) {
        r[0] = norm(m(1, 1));
        r[1] = norm(-m(0, 1));
        r[2] = norm(-m(1, 0));
        r[3] = norm(m(0, 0));
    } else {
        // adjugate; equals the inverse because det = 1
        auto cof = [&](int i0, int i1, int j0, int j1) {
            return m(i0, j0) * m(i1, j1) - m(i0, j1) * m(i1, j0);
        };
        r[0] = norm(cof(1, 2, 1, 2));
        r[1] = norm(-cof(0, 2, 1, 2));
        r[2] = norm(cof(0, 1, 1, 2));
        r[3] = norm(-cof(1, 2, 0, 2));
        r[4] = norm(cof(0, 2, 0, 2));
        r[5] = norm(-cof(0, 1, 0, 2));
        r[6] = norm(cof(1, 2, 0, 1));
        r[7] = norm(-cof(0, 2, 0, 1));
        r[8] = norm(cof(0, 1, 0, 1));
    }
    return ModMat(dim, modulus, r);
}

bool ModMat::is_identity() const { return *this == ModMat::identity(dim, modulus); }

std::string ModMat::key() const {
    std::string s;
    for (int i = 0; i < dim * dim; ++i) {
        if (i) s += ',';
        s += std::to_string(e[i]);
    }
    return s;
}

ModMat operator*(const ModMat& x, const ModMat& y) {
    if (x.dim != y.dim || x.modulus != y.modulus)
        throw validation_error("modmat: mixed dimensions or moduli");
    const unsigned long long n = x.modulus;
    std::array<unsigned, 9> r{};
    for (int i = 0; i < x.dim; ++i)
        for (int j = 0; j < x.dim; ++j) {
            unsigned long long s = 0;
            for (int k = 0; k < x.dim; ++k) s += (unsigned long long)x.at(i, k) * y.at(k, j) % n;
            r[i * x.dim + j] = unsigned(s % n);
        }
    return ModMat(x.dim, x.modulus, r);
}

bool operator==(const ModMat& x, const ModMat& y) {
    return x.dim == y.dim && x.modulus == y.modulus && x.e == y.e;
}

// --- FreeWord ---------------------------------------------------------------

namespace {
void append_reduced(std::vector<int>& out, int letter) {
    if (!out.empty() && out.back() == -letter)
        out.pop_back();
    else
        out.push_back(letter);
}
}  // namespace

FreeWord::FreeWord(int alphabet_, std::vector<int> letters_) : alphabet(alphabet_) {
    for (int l : letters_) {
        if (l == 0 || std::abs(l) > alphabet)
            throw validation_error("freeword: letter out of alphabet range");
        append_reduced(letters, l);
    }
}

FreeWord FreeWord::generator(int alphabet, int index, int power) {
    if (index < 0 || index >= alphabet) throw validation_error("freeword: bad generator index");
    FreeWord w;
    w.alphabet = alphabet;
    int letter = power >= 0 ? index + 1 : -(index + 1);
    for (int i = 0; i < std::abs(power); ++i) w.letters.push_back(letter);
    return w;
}

FreeWord FreeWord::inverse() const {
    FreeWord w;
    w.alphabet = alphabet;
    w.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(-*it);
    return w;
}

std::string FreeWord::key() const {
    if (letters.empty()) return "e";
    std::string s;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(letters[i]);
    }
    return s;
}

FreeWord operator*(const FreeWord& x, const FreeWord& y) {
    if (x.alphabet != y.alphabet) throw validation_error("freeword: mixed alphabets");
    FreeWord r;
    r.alphabet = x.alphabet;
    r.letters = x.letters;
    for (int l : y.letters) append_reduced(r.letters, l);
    return r;
}

bool operator==(const FreeWord& x, const FreeWord& y) {
    return x.alphabet == y.alphabet && x.letters == y.letters;
}

// --- GroupElement dispatch --------------------------------------------------

GroupElement ge_mul(const GroupElement& x, const GroupElement& y) {
    if (x.index() != y.index()) throw validation_error("group: mixed element kinds");
    return std::visit(
        [&](const auto& a) -> GroupElement {
            using T = std::decay_t<decltype(a)>;
            return a * std::get<T>(y);
        },
        x);
}

GroupElement ge_inverse(const GroupElement& x) {
    return std::visit([](const auto& a) -> GroupElement { return a.inverse(); }, x);
}

bool ge_is_identity(const GroupElement& x) {
    return std::visit([](const auto& a) { return a.is_identity(); }, x);
}

std::string ge_key(const GroupElement& x) {
    return std::visit([](const auto& a) { return a.key(); }, x);
}

bool ge_equal(const GroupElement& x, const GroupElement& y) {
    if (x.index() != y.index()) return false;
    return ge_key(x) == ge_key(y);
}

// --- GroupContext -----------------------------------------------------------

GroupElement GroupContext::identity() const {
    switch (kind) {
        case GroupKind::sl2int: return SL2Int();
        case GroupKind::modmatrix: return ModMat::identity(mod_dim, modulus);
        case GroupKind::freeword: return FreeWord(alphabet, {});
    }
    throw validation_error("group: unknown kind");
}

std::string GroupContext::header() const {
    switch (kind) {
        case GroupKind::sl2int: return "sl2int";
        case GroupKind::modmatrix:
            return (mod_dim == 3 ? "modmatrix3:" : "modmatrix:") + std::to_string(modulus);
        case GroupKind::freeword: return "freeword:" + std::to_string(alphabet);
    }
    throw validation_error("group: unknown kind");
}

GroupContext GroupContext::from_header(const std::string& h) {
    if (h == "sl2int") return sl2();
    auto parse_num = [&](std::size_t pos) -> unsigned long {
        try {
            return std::stoul(h.substr(pos));
        } catch (const std::exception&) {
            throw io_error("group header: cannot parse '" + h + "'");
        }
    };
    if (h.rfind("modmatrix3:", 0) == 0) return mod(unsigned(parse_num(11)), 3);
    if (h.rfind("modmatrix:", 0) == 0) return mod(unsigned(parse_num(10)), 2);
    if (h.rfind("freeword:", 0) == 0) return free_group(int(parse_num(9)));
    throw io_error("group header: unknown kind '" + h + "'");
}

bool GroupContext::matches(const GroupElement& g) const {
    switch (kind) {
        case GroupKind::sl2int: return std::holds_alternative<SL2Int>(g);
        case GroupKind::modmatrix: {
            const auto* m = std::get_if<ModMat>(&g);
            return m && m->modulus == modulus && m->dim == mod_dim;
        }
        case GroupKind::freeword: {
            const auto* w = std::get_if<FreeWord>(&g);
            return w && w->alphabet == alphabet;
        }
    }
    return false;
}

bool operator==(const GroupContext& a, const GroupContext& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case GroupKind::sl2int: return true;
        case GroupKind::modmatrix: return a.modulus == b.modulus && a.mod_dim == b.mod_dim;
        case GroupKind::freeword: return a.alphabet == b.alphabet;
    }
    return false;
}

GroupElement ge_from_key(const GroupContext& ctx, const std::string& key) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : key) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else
            cur += c;
    }
    parts.push_back(cur);
    try {
        switch (ctx.kind) {
            case GroupKind::sl2int: {
                if (parts.size() != 4) throw io_error("sl2int key: expected 4 entries");
                return SL2Int(Int(parts[0]), Int(parts[1]), Int(parts[2]), Int(parts[3]));
            }
            case GroupKind::modmatrix: {
                const int d = ctx.mod_dim;
                if (int(parts.size()) != d * d) throw io_error("modmat key: wrong entry count");
                std::array<unsigned, 9> e{};
                for (int i = 0; i < d * d; ++i) e[i] = unsigned(std::stoul(parts[i]));
                return ModMat(d, ctx.modulus, e);
            }
            case GroupKind::freeword: {
                if (key == "e") return FreeWord(ctx.alphabet, {});
                std::vector<int> ls;
                for (const auto& p : parts) ls.push_back(std::stoi(p));
                return FreeWord(ctx.alphabet, ls);
            }
        }
    } catch (const io_error&) {
        throw;
    } catch (const std::exception&) {
        throw io_error("group element key: cannot parse '" + key + "'");
    }
    throw io_error("group element key: unknown context");
}

// --- GeneratingSet ----------------------------------------------------------

void GeneratingSet::validate() const {
    std::set<std::string> names, keys;
    for (const auto& [name, g] : generators) {
        if (name.empty()) throw validation_error("generating set: empty generator name");
        if (!names.insert(name).second)
            throw validation_error("generating set: duplicate name '" + name + "'");
        if (!keys.insert(ge_key(g)).second)
            throw validation_error("generating set: duplicate element for '" + name + "'");
        if (!ctx.matches(g))
            throw validation_error("generating set: element '" + name + "' not in the group");
    }
    if (symmetric_closure && !is_symmetric_set())
        throw validation_error("generating set: declared symmetric but not closed under inverses");
}

std::optional<std::size_t> GeneratingSet::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i].first == name) return i;
    return std::nullopt;
}

bool GeneratingSet::is_symmetric_set() const {
    std::set<std::string> keys;
    for (const auto& [name, g] : generators) keys.insert(ge_key(g));
    for (const auto& [name, g] : generators)
        if (!keys.count(ge_key(ge_inverse(g)))) return false;
    return true;
}

// --- GroupRingElement -------------------------------------------------------

GroupRingElement GroupRingElement::delta(const GroupContext& ctx, const GroupElement& g,
                                         RationalComplex coeff) {
    GroupRingElement r(ctx);
    r.add_term(g, coeff);
    return r;
}

void GroupRingElement::add_term(const GroupElement& g, const RationalComplex& c) {
    if (!ctx.matches(g)) throw validation_error("group ring: element from a different group");
    if (c.is_zero()) return;
    std::string k = ge_key(g);
    auto it = terms.find(k);
    if (it == terms.end()) {
        terms.emplace(std::move(k), std::make_pair(g, c));
    } else {
        it->second.second = it->second.second + c;
        if (it->second.second.is_zero()) terms.erase(it);
    }
}

RationalComplex GroupRingElement::coeff_at(const GroupElement& g) const {
    auto it = terms.find(ge_key(g));
    return it == terms.end() ? RationalComplex() : it->second.second;
}

Rational GroupRingElement::l1_norm() const {
    Rational s = 0;
    for (const auto& [k, t] : terms) s += t.second.l1_abs();
    return s;
}

Rational GroupRingElement::linf_norm() const {
    Rational s = 0;
    for (const auto& [k, t] : terms) s = std::max(s, t.second.l1_abs());
    return s;
}

std::vector<GroupElement> GroupRingElement::support() const {
    std::vector<GroupElement> out;
    out.reserve(terms.size());
    for (const auto& [k, t] : terms) out.push_back(t.first);
    return out;
}

GroupRingElement gr_add(const GroupRingElement& a, const GroupRingElement& b) {
    if (!(a.ctx == b.ctx)) throw validation_error("group ring: mixed groups");
    GroupRingElement r = a;
    for (const auto& [k, t] : b.terms) r.add_term(t.first, t.second);
    return r;
}

GroupRingElement gr_sub(const GroupRingElement& a, const GroupRingElement& b) {
    return gr_add(a, gr_scale(RationalComplex(-1), b));
}

GroupRingElement gr_scale(const RationalComplex& s, const GroupRingElement& a) {
    GroupRingElement r(a.ctx);
    if (s.is_zero()) return r;
    for (const auto& [k, t] : a.terms) r.add_term(t.first, s * t.second);
    return r;
}

GroupRingElement gr_product(const GroupRingElement& a, const GroupRingElement& b) {
    if (!(a.ctx == b.ctx)) throw validation_error("group ring: mixed groups");
    GroupRingElement r(a.ctx);
    for (const auto& [ka, ta] : a.terms)
        for (const auto& [kb, tb] : b.terms)
            r.add_term(ge_mul(ta.first, tb.first), ta.second * tb.second);
    return r;
}

GroupRingElement gr_adjoint(const GroupRingElement& a) {
    GroupRingElement r(a.ctx);
    for (const auto& [k, t] : a.terms) r.add_term(ge_inverse(t.first), t.second.conj());
    return r;
}

bool gr_equal(const GroupRingElement& a, const GroupRingElement& b) {
    return a.ctx == b.ctx && gr_sub(a, b).is_zero();
}

GroupRingElement laplacian(const GeneratingSet& s) {
    s.validate();
    if (!s.is_symmetric_set())
        throw validation_error("laplacian: generating set not closed under inverses");
    if (s.size() == 0) throw validation_error("laplacian: empty generating set");
    GroupRingElement r(s.ctx);
    r.add_term(s.ctx.identity(), RationalComplex(1));
    RationalComplex w(Rational(-1, Int(s.size())), Rational(0));
    for (const auto& [name, g] : s.generators) r.add_term(g, w);
    return r;
}

// --- Cayley balls -----------------------------------------------------------

std::vector<BallEntry> cayley_ball_entries(const GeneratingSet& s, int radius) {
    s.validate();
    if (radius < 0) throw validation_error("cayley ball: negative radius");
    const int k = int(s.size());

    // Expansion alphabet: generators and their inverses, as signed indices.
    std::vector<std::pair<int, GroupElement>> steps;
    for (int i = 0; i < k; ++i) {
        steps.emplace_back(i + 1, s.at(i));
        steps.emplace_back(-(i + 1), ge_inverse(s.at(i)));
    }

    std::map<std::string, BallEntry> seen;
    GroupElement e = s.ctx.identity();
    seen.emplace(ge_key(e), BallEntry{e, FreeWord(k, {})});
    // Current layer, kept in canonical-key order for deterministic words.
    std::vector<std::string> layer{ge_key(e)};

    for (int r = 0; r < radius && !layer.empty(); ++r) {
        std::set<std::string> next;
        for (const auto& key : layer) {
            const BallEntry cur = seen.at(key);
            for (const auto& [letter, step] : steps) {
                GroupElement g = ge_mul(cur.element, step);
                std::string gk = ge_key(g);
                if (seen.count(gk)) continue;
                FreeWord w = cur.word * FreeWord(k, {letter});
                seen.emplace(gk, BallEntry{g, std::move(w)});
                next.insert(gk);
            }
        }
        layer.assign(next.begin(), next.end());
    }

    std::vector<BallEntry> out;
    out.reserve(seen.size());
    for (auto& [key, entry] : seen) out.push_back(entry);
    // Order by (word length, canonical key): BFS layers, lexicographic inside.
    std::stable_sort(out.begin(), out.end(), [](const BallEntry& a, const BallEntry& b) {
        if (a.word.length() != b.word.length()) return a.word.length() < b.word.length();
        return ge_key(a.element) < ge_key(b.element);
    });
    return out;
}

std::vector<GroupElement> cayley_ball(const GeneratingSet& s, int radius) {
    std::vector<GroupElement> out;
    for (auto& e : cayley_ball_entries(s, radius)) out.push_back(e.element);
    return out;
}

}  // namespace arlab
