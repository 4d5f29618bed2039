#ifndef GENCOVER_GROUPID_HPP
#define GENCOVER_GROUPID_HPP

#include "gencover/errors.hpp"

#include <optional>
#include <string>

namespace gencover {

// Identified Galois groups. Dihedral(n) means order 2n with n >= 3; the
// order-4 non-cyclic group is V4. Cubics with nonsquare discriminant are
// reported as Sn(3) ("S3"), which case analysis treats as dihedral n = 3.
struct GroupId {
    enum class Tag { Cyclic, Dihedral, V4, A4, S4, A5, Sn, Other };

    Tag tag = Tag::Other;
    long n = 0; // Cyclic(n), Dihedral(n), Sn(n); Other: n = order

    static GroupId cyclic(long n) { return {Tag::Cyclic, n}; }
    static GroupId dihedral(long n) {
        if (n < 3) fail(errc::internal, "dihedral needs n >= 3");
        return {Tag::Dihedral, n};
    }
    static GroupId v4() { return {Tag::V4, 0}; }
    static GroupId a4() { return {Tag::A4, 0}; }
    static GroupId s4() { return {Tag::S4, 0}; }
    static GroupId a5() { return {Tag::A5, 0}; }
    static GroupId symmetric(long n) { return {Tag::Sn, n}; }
    static GroupId other(long order) { return {Tag::Other, order}; }

    long order() const;
    std::string name() const;

    bool is_trivial() const { return tag == Tag::Cyclic && n == 1; }
    std::optional<long> cyclic_n() const {
        if (tag == Tag::Cyclic) return n;
        return std::nullopt;
    }
    // Dihedral of order 2n, including S3 = D3.
    std::optional<long> dihedral_n() const {
        if (tag == Tag::Dihedral) return n;
        if (tag == Tag::Sn && n == 3) return 3;
        return std::nullopt;
    }

    friend bool operator==(const GroupId& a, const GroupId& b) {
        return a.order() == b.order() && a.name() == b.name();
    }
    friend bool operator!=(const GroupId& a, const GroupId& b) { return !(a == b); }
};

} // namespace gencover

#endif
