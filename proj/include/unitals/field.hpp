#pragma once

// Exact arithmetic in GF(q), q prime, and in its quadratic extension GF(q^2).
//
// Elements are encoded as integer codes. In GF(q) the code is the residue.
// In GF(q^2) = GF(q)[x]/(x^2 + b x + c) the element c1*x + c0 has code
// c1*q + c0, so codes follow the canonical (c1, c0) lexicographic order and
// GF(q) embeds as the codes 0..q-1.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace unitals {

class FieldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool is_prime(std::uint64_t n);

class Field : public std::enable_shared_from_this<Field> {
public:
    static std::shared_ptr<const Field> prime(std::uint32_t q);
    static std::shared_ptr<const Field> extension(std::uint32_t q);

    std::uint32_t characteristic() const { return q_; }
    std::uint32_t order() const { return order_; }
    int degree() const { return degree_; }
    bool is_extension() const { return degree_ == 2; }
    bool uses_log_tables() const { return !exp_.empty(); }

    // Modulus x^2 + b x + c of the extension (both zero for a prime field).
    std::uint32_t modulus_b() const { return mod_b_; }
    std::uint32_t modulus_c() const { return mod_c_; }

    // The prime subfield; for a prime field this is the field itself.
    std::shared_ptr<const Field> base() const { return degree_ == 1 ? shared_from_this() : base_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        if (!exp_.empty()) return exp_[log_[a] + log_[b]];
        return mul_direct(a, b);
    }
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    // Extension only: a -> a^q and a -> a^(q+1). The norm is a code < q.
    std::uint32_t frobenius(std::uint32_t a) const;
    std::uint32_t norm(std::uint32_t a) const { return mul(a, frobenius(a)); }

    std::string format(std::uint32_t a) const;

private:
    Field(std::uint32_t q, int degree);
    std::uint32_t mul_direct(std::uint32_t a, std::uint32_t b) const;
    void build_log_tables();

    std::uint32_t q_;
    std::uint32_t order_;
    int degree_;
    std::uint32_t mod_b_ = 0;
    std::uint32_t mod_c_ = 0;
    std::uint32_t x_to_q_ = 0;  // code of x^q, extension only
    std::shared_ptr<const Field> base_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> exp_;  // length 2*(order-1)
};

// A code bound to its field. Mixed-field operands are rejected.
class FieldElement {
public:
    FieldElement(std::shared_ptr<const Field> field, std::uint32_t code);

    const std::shared_ptr<const Field>& field() const { return field_; }
    std::uint32_t code() const { return code_; }

    // (c1, c0) for extension elements; c1 is 0 for prime-field elements.
    std::uint32_t c1() const { return field_->is_extension() ? code_ / field_->characteristic() : 0; }
    std::uint32_t c0() const { return field_->is_extension() ? code_ % field_->characteristic() : code_; }

    bool is_zero() const { return code_ == 0; }

    friend bool operator==(const FieldElement& a, const FieldElement& b);

private:
    std::shared_ptr<const Field> field_;
    std::uint32_t code_;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement inv(const FieldElement& a);
FieldElement frobenius(const FieldElement& a);
// a^(q+1), returned as an element of the prime subfield.
FieldElement norm(const FieldElement& a);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return add(a, b); }
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return sub(a, b); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return mul(a, b); }

// Every element once, in canonical code order (0 first, then 1).
std::vector<FieldElement> enumerate(const std::shared_ptr<const Field>& field);

}  // namespace unitals
