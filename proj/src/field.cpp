#include "unitals/field.hpp"

#include <sstream>

namespace unitals {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

constexpr std::uint32_t kMaxCharacteristic = 46337;  // q^2 fits in 31 bits
constexpr std::uint32_t kLogTableLimit = 1u << 16;

bool same_field(const Field& a, const Field& b) {
    return &a == &b || (a.characteristic() == b.characteristic() && a.degree() == b.degree());
}

void require_same(const FieldElement& a, const FieldElement& b) {
    if (!same_field(*a.field(), *b.field())) throw FieldError("field mismatch");
}

}  // namespace

Field::Field(std::uint32_t q, int degree) : q_(q), order_(degree == 1 ? q : q * q), degree_(degree) {}

std::shared_ptr<const Field> Field::prime(std::uint32_t q) {
    if (!is_prime(q)) throw FieldError("q must be prime");
    if (q > kMaxCharacteristic) throw FieldError("q too large");
    std::shared_ptr<Field> f(new Field(q, 1));
    f->build_log_tables();
    return f;
}

std::shared_ptr<const Field> Field::extension(std::uint32_t q) {
    auto base = prime(q);
    std::shared_ptr<Field> f(new Field(q, 2));
    f->base_ = base;
    // Smallest monic irreducible x^2 + b x + c, scanning (b, c) lexicographically.
    bool found = false;
    for (std::uint32_t b = 0; b < q && !found; ++b) {
        for (std::uint32_t c = 0; c < q && !found; ++c) {
            bool has_root = false;
            for (std::uint64_t t = 0; t < q && !has_root; ++t) has_root = (t * t + b * t + c) % q == 0;
            if (!has_root) {
                f->mod_b_ = b;
                f->mod_c_ = c;
                found = true;
            }
        }
    }
    if (!found) throw FieldError("no irreducible quadratic");  // unreachable for prime q
    // x^q by square-and-multiply with direct arithmetic.
    {
        std::uint32_t result = 1, base_x = q;  // code q == x
        for (std::uint64_t e = q; e; e >>= 1) {
            if (e & 1) result = f->mul_direct(result, base_x);
            base_x = f->mul_direct(base_x, base_x);
        }
        f->x_to_q_ = result;
    }
    f->build_log_tables();
    return f;
}

std::uint32_t Field::mul_direct(std::uint32_t a, std::uint32_t b) const {
    const std::uint64_t q = q_;
    if (degree_ == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % q);
    const std::uint64_t a1 = a / q_, a0 = a % q_, b1 = b / q_, b0 = b % q_;
    const std::uint64_t hi = a1 * b1 % q;                   // coefficient of x^2
    const std::uint64_t mid = (a1 * b0 + a0 * b1) % q;      // coefficient of x
    const std::uint64_t lo = a0 * b0 % q;
    // x^2 = -b x - c
    const std::uint64_t c1 = (mid + (q - mod_b_) % q * hi) % q;
    const std::uint64_t c0 = (lo + (q - mod_c_) % q * hi) % q;
    return static_cast<std::uint32_t>(c1 * q + c0);
}

void Field::build_log_tables() {
    if (order_ > kLogTableLimit) return;
    const std::uint32_t group = order_ - 1;
    if (group == 0) return;
    std::vector<std::uint32_t> prime_factors;
    {
        std::uint32_t m = group;
        for (std::uint32_t d = 2; d * d <= m; ++d)
            if (m % d == 0) {
                prime_factors.push_back(d);
                while (m % d == 0) m /= d;
            }
        if (m > 1) prime_factors.push_back(m);
    }
    auto pow_direct = [&](std::uint32_t a, std::uint64_t e) {
        std::uint32_t r = 1;
        for (; e; e >>= 1) {
            if (e & 1) r = mul_direct(r, a);
            a = mul_direct(a, a);
        }
        return r;
    };
    std::uint32_t gen = 0;
    for (std::uint32_t g = 1; g < order_ && gen == 0; ++g) {
        bool primitive = true;
        for (auto p : prime_factors)
            if (pow_direct(g, group / p) == 1) {
                primitive = false;
                break;
            }
        if (primitive) gen = g;
    }
    log_.assign(order_, 0);
    exp_.assign(2 * static_cast<std::size_t>(group), 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < group; ++i) {
        exp_[i] = exp_[i + group] = x;
        log_[x] = i;
        x = mul_direct(x, gen);
    }
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
    if (degree_ == 1) {
        const std::uint32_t s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    std::uint32_t c1 = a / q_ + b / q_, c0 = a % q_ + b % q_;
    if (c1 >= q_) c1 -= q_;
    if (c0 >= q_) c0 -= q_;
    return c1 * q_ + c0;
}

std::uint32_t Field::neg(std::uint32_t a) const {
    if (degree_ == 1) return a == 0 ? 0 : q_ - a;
    const std::uint32_t c1 = a / q_, c0 = a % q_;
    return (c1 ? q_ - c1 : 0) * q_ + (c0 ? q_ - c0 : 0);
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    for (; e; e >>= 1) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
    }
    return r;
}

std::uint32_t Field::inv(std::uint32_t a) const {
    if (a == 0) throw FieldError("zero has no inverse");
    if (!exp_.empty()) return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
    return pow(a, order_ - 2);
}

std::uint32_t Field::frobenius(std::uint32_t a) const {
    if (degree_ != 2) throw FieldError("frobenius requires an extension-field element");
    // (c1 x + c0)^q = c1 x^q + c0
    const std::uint32_t c1 = a / q_, c0 = a % q_;
    return add(mul(c1, x_to_q_), c0);
}

std::string Field::format(std::uint32_t a) const {
    if (degree_ == 1) return std::to_string(a);
    std::ostringstream os;
    os << a / q_ << "x+" << a % q_;
    return os.str();
}

FieldElement::FieldElement(std::shared_ptr<const Field> field, std::uint32_t code) : field_(std::move(field)), code_(code) {
    if (code_ >= field_->order()) throw FieldError("element code out of range");
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    return same_field(*a.field_, *b.field_) && a.code_ == b.code_;
}

FieldElement add(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return {a.field(), a.field()->add(a.code(), b.code())};
}

FieldElement sub(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return {a.field(), a.field()->sub(a.code(), b.code())};
}

FieldElement mul(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return {a.field(), a.field()->mul(a.code(), b.code())};
}

FieldElement inv(const FieldElement& a) { return {a.field(), a.field()->inv(a.code())}; }

FieldElement frobenius(const FieldElement& a) { return {a.field(), a.field()->frobenius(a.code())}; }

FieldElement norm(const FieldElement& a) {
    if (!a.field()->is_extension()) throw FieldError("norm requires an extension-field element");
    return {a.field()->base(), a.field()->norm(a.code())};
}

std::vector<FieldElement> enumerate(const std::shared_ptr<const Field>& field) {
    std::vector<FieldElement> out;
    out.reserve(field->order());
    for (std::uint32_t c = 0; c < field->order(); ++c) out.emplace_back(field, c);
    return out;
}

}  // namespace unitals
