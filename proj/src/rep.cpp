#include "arlab/rep.hpp"

#include <algorithm>

namespace arlab {

SL2Int sl2_gen_S() { return SL2Int(0, -1, 1, 0); }
SL2Int sl2_gen_T() { return SL2Int(1, 1, 0, 1); }

namespace {
// q with |a - q c| <= |c| / 2 (nearest-integer division).
Int nearest_quotient(const Int& a, const Int& c) {
    Int q = a / c;
    Int r = a - q * c;
    if (2 * abs(r) > abs(c)) q += (r < 0) == (c < 0) ? 1 : -1;
    return q;
}

void append_power(std::vector<int>& letters, int letter, const Int& power) {
    Int n = abs(power);
    int l = power >= 0 ? letter : -letter;
    for (Int i = 0; i < n; ++i) letters.push_back(l);
}
}  // namespace

FreeWord sl2_word_in_standard_generators(const SL2Int& x) {
    // Maintain x = prefix * y and shrink |y.c| by alternating T-shears and
    // S-swaps until y is upper triangular.
    constexpr int S = 1, T = 2;  // 1-based letters over the alphabet {S, T}
    std::vector<int> letters;
    SL2Int y = x;
    while (y.c != 0) {
        if (y.a != 0) {
            Int q = nearest_quotient(y.a, y.c);
            // y <- T^{-q} y
            y = SL2Int(y.a - q * y.c, y.b - q * y.d, y.c, y.d);
            append_power(letters, T, q);
        }
        // y <- S^{-1} y = (c, d; -a, -b)
        y = SL2Int(y.c, y.d, -y.a, -y.b);
        letters.push_back(S);
    }
    if (y.a == 1) {
        append_power(letters, T, y.b);
    } else {
        // y = (-1, b; 0, -1) = S^2 T^{-b}
        letters.push_back(S);
        letters.push_back(S);
        append_power(letters, T, -y.b);
    }
    FreeWord w(2, letters);

    // Exact verification of the decomposition.
    SL2Int prod;
    for (int l : w.letters) {
        SL2Int g = std::abs(l) == S ? sl2_gen_S() : sl2_gen_T();
        prod = prod * (l > 0 ? g : g.inverse());
    }
    if (!(prod == x)) throw validation_error("sl2 word decomposition failed verification");
    return w;
}

std::vector<FreeWord> sl2_standard_relators() {
    // S^4 and S^2 (ST)^-3 over the alphabet {S, T}.
    FreeWord S = FreeWord::generator(2, 0);
    FreeWord T = FreeWord::generator(2, 1);
    FreeWord ST = S * T;
    FreeWord r2 = S * S * (ST * ST * ST).inverse();
    return {S * S * S * S, r2};
}

// --- UnitaryRep ---------------------------------------------------------------

UnitaryRep::UnitaryRep(GeneratingSet gens, const std::map<std::string, Mat>& images,
                       double unitary_tol)
    : gens_(std::move(gens)) {
    gens_.validate();
    for (const auto& [name, m] : images)
        if (!gens_.index_of(name))
            throw validation_error("rep: image for unknown generator '" + name + "'");

    images_.resize(gens_.size());
    std::vector<bool> have(gens_.size(), false);
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        auto it = images.find(gens_.generators[i].first);
        if (it == images.end()) continue;
        images_[i] = it->second;
        have[i] = true;
    }
    // Fill missing generators whose inverse element has a provided image.
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (have[i]) continue;
        std::string inv_key = ge_key(ge_inverse(gens_.at(i)));
        for (std::size_t j = 0; j < gens_.size(); ++j) {
            if (have[j] && ge_key(gens_.at(j)) == inv_key) {
                images_[i] = images_[j].adjoint();
                have[i] = true;
                break;
            }
        }
        if (!have[i])
            throw validation_error("rep: no image for generator '" + gens_.generators[i].first +
                                   "'");
    }

    dim_ = images_.empty() ? 0 : images_[0].rows();
    if (dim_ <= 0) throw validation_error("rep: empty representation");
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i].rows() != dim_ || images_[i].cols() != dim_)
            throw validation_error("rep: generator matrices of unequal dimension");
        if (!is_unitary(images_[i], unitary_tol))
            throw validation_error("rep: image of '" + gens_.generators[i].first +
                                   "' not unitary within tolerance");
    }
    // Adjoint convention: if s and s^-1 are both named, the images must be
    // mutual inverses.
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        std::string inv_key = ge_key(ge_inverse(gens_.at(i)));
        for (std::size_t j = 0; j < gens_.size(); ++j) {
            if (ge_key(gens_.at(j)) != inv_key) continue;
            if (operator_norm(Mat(images_[i] * images_[j] - Mat::Identity(dim_, dim_))) >
                std::max(unitary_tol, 1e-9))
                throw validation_error("rep: images of '" + gens_.generators[i].first + "' and '" +
                                       gens_.generators[j].first +
                                       "' are not mutual inverses");
        }
    }
}

const Mat& UnitaryRep::image(const std::string& name) const {
    auto idx = gens_.index_of(name);
    if (!idx) throw validation_error("rep: unknown generator '" + name + "'");
    return images_[*idx];
}

Mat UnitaryRep::evaluate_word(const FreeWord& w) const {
    if (w.alphabet != int(gens_.size()))
        throw validation_error("rep: word alphabet does not match the generating set");
    Mat out = Mat::Identity(dim_, dim_);
    for (int l : w.letters) {
        const Mat& g = images_[std::size_t(std::abs(l) - 1)];
        if (l > 0)
            out = out * g;
        else
            out = out * g.adjoint();
    }
    return out;
}

void UnitaryRep::build_word_table() const {
    if (word_table_) return;
    if (gens_.ctx.kind != GroupKind::modmatrix)
        throw validation_error("rep: no canonical word table for infinite groups");
    auto table = std::make_shared<std::map<std::string, FreeWord>>();
    // The group is finite: grow the ball until it stops growing.
    std::size_t prev = 0;
    for (int r = 1; r <= 256; ++r) {
        auto entries = cayley_ball_entries(gens_, r);
        if (entries.size() == prev) {
            for (auto& e : entries) table->emplace(ge_key(e.element), e.word);
            word_table_ = table;
            return;
        }
        prev = entries.size();
    }
    throw validation_error("rep: group too large for a word table");
}

std::optional<FreeWord> UnitaryRep::canonical_word(const GroupElement& g) const {
    const int k = int(gens_.size());
    // Generator (or inverse of a generator) hit.
    std::string key = ge_key(g);
    for (int i = 0; i < k; ++i) {
        if (ge_key(gens_.at(i)) == key) return FreeWord(k, {i + 1});
        if (ge_key(ge_inverse(gens_.at(i))) == key) return FreeWord(k, {-(i + 1)});
    }
    if (ge_is_identity(g)) return FreeWord(k, {});

    switch (gens_.ctx.kind) {
        case GroupKind::modmatrix: {
            build_word_table();
            auto it = word_table_->find(key);
            if (it == word_table_->end()) return std::nullopt;
            return it->second;
        }
        case GroupKind::freeword: {
            // Resolve each standard letter against the generating set.
            const auto& w = std::get<FreeWord>(g);
            std::vector<int> resolved;
            for (int l : w.letters) {
                FreeWord base = FreeWord::generator(w.alphabet, std::abs(l) - 1);
                std::string bk = ge_key(GroupElement(base));
                std::string bik = ge_key(GroupElement(base.inverse()));
                int found = 0;
                for (int i = 0; i < k && !found; ++i) {
                    if (ge_key(gens_.at(i)) == bk) found = i + 1;
                    else if (ge_key(gens_.at(i)) == bik) found = -(i + 1);
                }
                if (!found) return std::nullopt;
                resolved.push_back(l > 0 ? found : -found);
            }
            return FreeWord(k, resolved);
        }
        case GroupKind::sl2int: {
            // Requires images of the standard S and T (by element, any name).
            const SL2Int S = sl2_gen_S(), T = sl2_gen_T();
            auto find_gen = [&](const SL2Int& x) -> int {
                std::string xk = x.key(), xik = x.inverse().key();
                for (int i = 0; i < k; ++i) {
                    if (ge_key(gens_.at(i)) == xk) return i + 1;
                    if (ge_key(gens_.at(i)) == xik) return -(i + 1);
                }
                return 0;
            };
            int si = find_gen(S), ti = find_gen(T);
            if (!si || !ti) return std::nullopt;
            FreeWord st = sl2_word_in_standard_generators(std::get<SL2Int>(g));
            std::vector<int> resolved;
            for (int l : st.letters) {
                int base = std::abs(l) == 1 ? si : ti;
                resolved.push_back(l > 0 ? base : -base);
            }
            return FreeWord(k, resolved);
        }
    }
    return std::nullopt;
}

Mat UnitaryRep::evaluate_element(const GroupElement& g) const {
    if (!gens_.ctx.matches(g))
        throw validation_error("rep: element does not belong to the representation's group");
    if (element_evaluator_) return element_evaluator_(g);
    auto w = canonical_word(g);
    if (!w)
        throw validation_error("rep: element '" + ge_key(g) +
                               "' not evaluable over the generating set");
    return evaluate_word(*w);
}

Mat UnitaryRep::ring_apply(const GroupRingElement& xi) const {
    if (!(xi.ctx == gens_.ctx)) throw validation_error("rep: ring element from a different group");
    Mat out = Mat::Zero(dim_, dim_);
    for (const auto& [key, term] : xi.terms) {
        Complex c(term.second.re.convert_to<double>(), term.second.im.convert_to<double>());
        out += c * evaluate_element(term.first);
    }
    return out;
}

Mat ring_extension_apply(const UnitaryRep& rep, const GroupRingElement& xi) {
    return rep.ring_apply(xi);
}

// --- defect / distance / character ---------------------------------------------

namespace {
double defect_norm(const Mat& x, DefectNorm n) {
    return n == DefectNorm::normalized_hs ? normalized_hs_norm(x) : operator_norm(x);
}
}  // namespace

DefectReport defect_report(const UnitaryRep& rep, const std::vector<FreeWord>& relators,
                           const std::vector<std::pair<GroupElement, GroupElement>>& pairs,
                           DefectNorm norm) {
    DefectReport rpt;
    rpt.norm = norm;
    const Mat id = Mat::Identity(rep.dim(), rep.dim());
    for (const auto& r : relators) {
        double d = defect_norm(rep.evaluate_word(r) - id, norm);
        rpt.per_relator[r.key()] = d;
        rpt.max_defect = std::max(rpt.max_defect, d);
    }
    for (const auto& [g, h] : pairs) {
        Mat lhs = rep.evaluate_element(ge_mul(g, h));
        Mat rhs = rep.evaluate_element(g) * rep.evaluate_element(h);
        double d = defect_norm(lhs - rhs, norm);
        rpt.pairs_checked.push_back({g, h, d});
        rpt.max_defect = std::max(rpt.max_defect, d);
    }
    return rpt;
}

double rep_distance(const UnitaryRep& a, const UnitaryRep& b) {
    const auto& ga = a.generators();
    const auto& gb = b.generators();
    if (ga.size() != gb.size()) throw validation_error("rep distance: mismatched alphabets");
    for (std::size_t i = 0; i < ga.size(); ++i)
        if (ga.generators[i].first != gb.generators[i].first)
            throw validation_error("rep distance: mismatched alphabets");
    double d = 0;
    for (std::size_t i = 0; i < ga.size(); ++i)
        d = std::max(d, d2_distance(a.image(i), b.image(i)));
    return d;
}

std::map<std::string, Complex> trace_character(const UnitaryRep& rep,
                                               const std::vector<GroupElement>& elements) {
    std::map<std::string, Complex> out;
    for (const auto& g : elements) out[ge_key(g)] = normalized_trace(rep.evaluate_element(g));
    return out;
}

UnitaryRep direct_sum(const UnitaryRep& a, const UnitaryRep& b) {
    const auto& ga = a.generators();
    const auto& gb = b.generators();
    if (ga.size() != gb.size()) throw validation_error("direct sum: mismatched alphabets");
    std::map<std::string, Mat> images;
    for (std::size_t i = 0; i < ga.size(); ++i) {
        if (ga.generators[i].first != gb.generators[i].first)
            throw validation_error("direct sum: mismatched alphabets");
        Mat m = Mat::Zero(a.dim() + b.dim(), a.dim() + b.dim());
        m.topLeftCorner(a.dim(), a.dim()) = a.image(i);
        m.bottomRightCorner(b.dim(), b.dim()) = b.image(i);
        images[ga.generators[i].first] = m;
    }
    return UnitaryRep(ga, images);
}

}  // namespace arlab
