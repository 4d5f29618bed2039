#ifndef GENCOVER_NUMFIELD_HPP
#define GENCOVER_NUMFIELD_HPP

#include "gencover/factor.hpp"
#include "gencover/poly.hpp"
#include "gencover/rootbox.hpp"

#include <memory>
#include <optional>

namespace gencover {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Number field Q[x]/(defining) with a distinguished complex embedding given
// by an isolating rectangle. User-facing base fields are capped at degree 4;
// internal working fields (orbit fields, flattened towers, splitting fields)
// may go up to degree 24.
class NumberField {
  public:
    static constexpr long kPublicDegreeCap = 4;
    static constexpr long kInternalDegreeCap = 24;

    // Verifies irreducibility; root selects among the canonical root order.
    static FieldPtr create(const QPoly& defining, size_t root_index = 0);
    static FieldPtr create_internal(const QPoly& defining, size_t root_index = 0);

    long degree() const { return defining_.degree(); }
    const QPoly& defining() const { return defining_; }
    const Box& embedding() const { return embedding_; }
    size_t root_index() const { return root_index_; }

    friend bool operator==(const NumberField& a, const NumberField& b) {
        return a.defining_ == b.defining_ && a.root_index_ == b.root_index_;
    }

  private:
    NumberField(QPoly f, Box b, size_t idx)
        : defining_(std::move(f)), embedding_(std::move(b)), root_index_(idx) {}
    static FieldPtr make(const QPoly& defining, size_t root_index, long cap);
    QPoly defining_;
    Box embedding_;
    size_t root_index_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

// Element of Q or of a number field; a null field pointer means Q. Arithmetic
// between a rational and a field element promotes the rational.
class NFElem {
  public:
    NFElem() : rep_{} {}
    NFElem(long v) { set_rat(Rat(v)); }
    NFElem(const Rat& v) { set_rat(v); }
    NFElem(FieldPtr fld, std::vector<Rat> rep) : fld_(std::move(fld)), rep_(std::move(rep)) {
        trim();
        normalize_rational();
    }

    static NFElem generator(const FieldPtr& fld) {
        if (!fld) fail(errc::internal, "generator of Q");
        if (fld->degree() == 1) return NFElem(-fld->defining().coeff(0));
        return NFElem(fld, {Rat(0), Rat(1)});
    }

    const FieldPtr& field() const { return fld_; }
    bool is_rational() const { return rep_.size() <= 1; }
    bool is_zero() const { return rep_.empty(); }
    Rat as_rat() const {
        if (!is_rational()) fail(errc::internal, "non-rational element");
        return rep_.empty() ? Rat(0) : rep_[0];
    }
    const std::vector<Rat>& rep() const { return rep_; }

    NFElem operator-() const;
    friend NFElem operator+(const NFElem& a, const NFElem& b);
    friend NFElem operator-(const NFElem& a, const NFElem& b);
    friend NFElem operator*(const NFElem& a, const NFElem& b);
    friend NFElem operator/(const NFElem& a, const NFElem& b);
    friend bool operator==(const NFElem& a, const NFElem& b);
    friend bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }

    NFElem inverse() const;

  private:
    void set_rat(const Rat& v) {
        rep_.clear();
        if (v != 0) rep_.push_back(v);
    }
    void trim() {
        while (!rep_.empty() && rep_.back() == 0) rep_.pop_back();
    }
    void normalize_rational() {
        if (rep_.size() <= 1) fld_.reset();
    }
    FieldPtr fld_;
    std::vector<Rat> rep_;
};

// total order for canonical output; compares rep vectors lexicographically
int nf_order(const NFElem& a, const NFElem& b);

using KPoly = Poly<NFElem>;

KPoly lift_to_field(const QPoly& f);
QPoly rational_poly(const KPoly& f); // requires all coefficients rational

struct KFactorization {
    NFElem constant;
    std::vector<std::pair<KPoly, unsigned>> factors; // monic irreducible over k
};

// Trager norm factorization over k (Zassenhaus when k is Q).
KFactorization factor_over_field(const KPoly& f, const FieldPtr& k);

bool is_irreducible_over_field(const KPoly& f, const FieldPtr& k);

// Roots of f lying in k, canonically ordered.
std::vector<NFElem> roots_in_field(const KPoly& f, const FieldPtr& k);

// Some root of f in k if one exists (canonical first).
std::optional<NFElem> root_in_field(const QPoly& f, const FieldPtr& k);

std::optional<NFElem> sqrt_in_field(const NFElem& c, const FieldPtr& k);
bool is_square_in_field(const NFElem& c, const FieldPtr& k);

bool has_root_of_unity(const FieldPtr& k, unsigned n);
bool has_cos_of_root_of_unity(const FieldPtr& k, unsigned n);

// Flattened extension M = Q(beta) isomorphic to k(gamma) for gamma a root of
// h (irreducible over k). Returns M, the image of k's generator, and a root
// of h inside M.
struct FieldExtension {
    FieldPtr field;
    NFElem base_gen_image; // image of k's generator (rational 0 when k = Q)
    NFElem root;           // root of h in the new field
};
FieldExtension extend_field(const FieldPtr& k, const KPoly& h);

// Coefficient-wise map of a polynomial over k into M via the generator image.
KPoly map_poly(const KPoly& f, const FieldPtr& M, const NFElem& base_gen_image);
NFElem map_elem(const NFElem& e, const FieldPtr& M, const NFElem& base_gen_image);

// Minimal polynomial over Q of an element of a number field.
QPoly min_poly_over_Q(const NFElem& e);

} // namespace gencover

#endif
