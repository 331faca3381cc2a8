// curve.hpp
//
// Koblitz curve group law y² + xy = x³ + ax² + 1 over GF(2^m), affine
// coordinates with one field inversion per addition, plus the registry of
// the five NIST K-curves bound to their DH group identifiers and a 22-point
// toy curve small enough for exhaustive testing.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ecike/bigint.hpp"
#include "ecike/bytes.hpp"
#include "ecike/gf2m.hpp"

namespace ecike::curve {

using gf2m::Element;
using gf2m::FieldId;

class Point {
public:
    Point() = default;  // the point at infinity
    static Point infinity() { return Point{}; }
    static Point affine(Element x, Element y);

    bool is_infinity() const { return !coords_.has_value(); }
    const Element& x() const;
    const Element& y() const;

    friend bool operator==(const Point& a, const Point& b) = default;

private:
    std::optional<std::pair<Element, Element>> coords_;
};

struct Params {
    std::string name;
    FieldId field;
    unsigned a;        // 0 or 1; b is always 1
    unsigned cofactor;
    BigUint order;     // prime order of the base point
    Point base;
    int group_id;      // DH group identifier; 0 when unregistered (toy curve)

    std::size_t coord_bytes() const;       // ceil(m/8)
    std::size_t point_bytes() const;       // uncompressed: 1 + 2*coord_bytes
    unsigned degree() const { return gf2m::Field::get(field).degree(); }
};

// Lookup by name ("K-163" ... "K-571", "TOY"); throws LookupError.
const Params& params_for(std::string_view name);

// Lookup by DH group identifier {5, 15, 16, 17, 18}; throws LookupError.
const Params& params_for_group(int group_id);

// The five production curves, ascending field degree.
const std::vector<std::string>& production_curve_names();

bool is_on_curve(const Point& p, const Params& params);

// -(x, y) = (x, x + y) on binary curves.
Point negate(const Point& p, const Params& params);

// Group law; validates both operands (domain error when off-curve).
Point add(const Point& p, const Point& q, const Params& params);

// Double-and-add; accepts 0 <= k <= order, validates p.
Point scalar_mul(const BigUint& k, const Point& p, const Params& params);

// 0x04 ‖ x ‖ y (big-endian, coord_bytes each), or a single 0x00 for infinity.
Bytes encode_point(const Point& p, const Params& params);
Point decode_point(BytesView in, const Params& params);  // throws ParseError

}  // namespace ecike::curve
