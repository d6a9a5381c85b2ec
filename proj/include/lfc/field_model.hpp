#pragma once

#include "lfc/bigint.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lfc {

// A finite extension F of Q_p, described only through the invariants that
// the counting formulas consume. The uniformizer is never represented.
//
// Roots of unity of p-power order are tracked to depth 1 for odd p (mu_p)
// and depth 2 for p = 2 (mu_4); no count of degree <= 4 needs more.
class LocalField {
public:
    unsigned long p() const { return p_; }
    unsigned e() const { return e_; }
    unsigned f() const { return f_; }
    unsigned m() const { return e_ * f_; }   // [F : Q_p]
    const Int& q() const { return q_; }      // residue field size p^f
    Int q_pow_e() const { return ipow(q_, e_); }

    // For p = 2 this is always true (-1 lies in F).
    bool has_mu_p() const { return has_mu_p_; }
    // Only meaningful for p = 2; false for odd p.
    bool has_mu_4() const { return has_mu_4_; }

    // "p,e,f,mu_p,mu_4" with '+'/'-' flags; mu_p prints '-' for p = 2 and
    // mu_4 prints '-' for odd p, since neither is a free choice there.
    std::string descriptor() const;

    friend bool operator==(const LocalField&, const LocalField&) = default;

private:
    friend LocalField make_field(unsigned long, unsigned, unsigned, bool, bool);
    LocalField() = default;

    unsigned long p_ = 2;
    unsigned e_ = 1;
    unsigned f_ = 1;
    bool has_mu_p_ = true;
    bool has_mu_4_ = false;
    Int q_ = 2;
};

// Validates and builds a field. Throws InvalidArgument when p is not prime,
// e or f is zero, has_mu_p is set for odd p without (p-1) | e, has_mu_4 is
// set with e odd, or has_mu_4 is set for odd p. has_mu_p is ignored for p = 2.
LocalField make_field(unsigned long p, unsigned e, unsigned f, bool has_mu_p = false,
                      bool has_mu_4 = false);

// Same invariants with a different residue degree; the roots-of-unity flags
// carry over (an unramified extension adds no p-power roots of unity).
LocalField unramified_extension(const LocalField& F, unsigned degree);

// True iff mu_l is contained in F. Supported l: 2, 3, 4, or gcd(l, p) = 1.
// Throws Unsupported for deeper p-power roots of unity.
bool contains_mu(const LocalField& F, unsigned long l);

// |mu_n(F)| for supported n.
Int count_roots_of_unity(const LocalField& F, unsigned long n);

// A finite abelian group as a multiset of cyclic prime-power orders, kept
// sorted descending. The trivial group has no factors.
class AbelianShape {
public:
    AbelianShape() = default;
    // Any positive orders; composite ones are split into primary parts and
    // 1s are dropped.
    explicit AbelianShape(const std::vector<Int>& cyclic_orders);

    const std::vector<Int>& factors() const { return factors_; }
    const Int& order() const { return order_; }
    std::string to_string() const;   // "[4,4,2]"

    friend bool operator==(const AbelianShape&, const AbelianShape&) = default;

private:
    std::vector<Int> factors_;
    Int order_ = 1;
};

// Structure of F*/(F*)^n from F* = <pi> x mu_{q-1} x mu_{p^a} x Z_p^m.
AbelianShape unit_quotient(const LocalField& F, unsigned long n);

// Number of x in the group with x^k = 1, i.e. the product of gcd(c, k).
Int count_order_dividing(const AbelianShape& shape, const Int& k);

}  // namespace lfc
