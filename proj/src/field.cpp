#include "qmds/field.hpp"

#include "qmds/errors.hpp"

#include <array>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace qmds {

namespace {

// Dense polynomials over Z_p, constant term first, used only to find moduli.
using ZpPoly = std::vector<u64>;

void trim(ZpPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

ZpPoly zp_mod(ZpPoly a, const ZpPoly& f, u64 p)
{
    // f is monic
    trim(a);
    const std::size_t df = f.size() - 1;
    while (a.size() > df) {
        const u64 c = a.back();
        const std::size_t shift = a.size() - 1 - df;
        if (c != 0) {
            for (std::size_t i = 0; i <= df; ++i)
                a[shift + i] = (a[shift + i] + mul_mod(p - c, f[i], p)) % p;
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

ZpPoly zp_mulmod(const ZpPoly& a, const ZpPoly& b, const ZpPoly& f, u64 p)
{
    if (a.empty() || b.empty())
        return {};
    ZpPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + mul_mod(a[i], b[j], p)) % p;
    }
    return zp_mod(std::move(out), f, p);
}

ZpPoly zp_powmod(ZpPoly base, u64 e, const ZpPoly& f, u64 p)
{
    ZpPoly result{ 1 };
    result = zp_mod(result, f, p);
    base = zp_mod(base, f, p);
    while (e > 0) {
        if (e & 1)
            result = zp_mulmod(result, base, f, p);
        base = zp_mulmod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, u64 p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic, then a mod b
        const u64 lead_inv = pow_mod(b.back(), p - 2, p);
        for (auto& c : b)
            c = mul_mod(c, lead_inv, p);
        a = zp_mod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

// Rabin's test: f of degree m is irreducible iff X^(p^m) = X mod f and
// gcd(X^(p^(m/l)) - X, f) = 1 for every prime l | m.
bool zp_irreducible(const ZpPoly& f, u64 p)
{
    const unsigned m = static_cast<unsigned>(f.size() - 1);
    if (m == 1)
        return true;
    if (f[0] == 0)
        return false;
    std::vector<ZpPoly> frob(m + 1);
    frob[0] = zp_mod({ 0, 1 }, f, p);
    for (unsigned i = 1; i <= m; ++i)
        frob[i] = zp_powmod(frob[i - 1], p, f, p);
    const ZpPoly x = zp_mod({ 0, 1 }, f, p);
    if (frob[m] != x)
        return false;
    for (auto [l, k] : factorize(m)) {
        ZpPoly diff = frob[m / l];
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        if (diff.empty())
            return false;
        if (zp_gcd(diff, f, p).size() != 1)
            return false;
    }
    return true;
}

// Odometer over coordinate tuples in lexicographic order, first entry most
// significant. Returns false once every tuple has been visited.
bool next_lex(std::vector<u64>& digits, u64 p)
{
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < p)
            return true;
        digits[i] = 0;
    }
    return false;
}

std::vector<u64> smallest_irreducible(u64 p, unsigned m)
{
    std::vector<u64> lower(m, 0);
    if (m > 1)
        lower[0] = 1;  // X divides anything with zero constant term
    do {
        ZpPoly f(lower.begin(), lower.end());
        f.push_back(1);
        if (zp_irreducible(f, p))
            return f;
    } while (next_lex(lower, p));
    throw VerificationFailure("no irreducible polynomial found");
}

} // namespace

PrimePowerField::PrimePowerField(u64 p, unsigned m)
    : p_(p), m_(m)
{
    if (m == 0)
        throw InvalidArgument("field degree must be at least 1");
    if (m > kMaxDegree)
        throw BudgetExceeded("field degree exceeds supported maximum");
    if (!is_prime(p))
        throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
    if (p >= (u64{1} << 31))
        throw BudgetExceeded("field characteristic too large");
    order_ = checked_pow(p, m);
    if (order_ > kExactBudget)
        throw BudgetExceeded("field order " + std::to_string(p) + "^" + std::to_string(m) +
                             " exceeds 2^60");
    modulus_ = smallest_irreducible(p, m);
    group_factors_ = factorize(order_ - 1);

    std::vector<u64> digits(m, 0);
    bool found = false;
    while (next_lex(digits, p)) {
        FieldElement candidate = from_coords(digits);
        if (is_primitive(candidate)) {
            generator_ = candidate;
            found = true;
            break;
        }
    }
    if (!found)
        throw VerificationFailure("no primitive element found");

    if (order_ <= kTableLimit) {
        const u64 n = order_ - 1;
        exp_.resize(n);
        log_.assign(order_, 0);
        FieldElement x = one();
        for (u64 i = 0; i < n; ++i) {
            exp_[i] = static_cast<std::uint32_t>(x.code);
            log_[x.code] = static_cast<std::uint32_t>(i);
            x = mul_reduce(x, generator_);
        }
    }
}

void PrimePowerField::unpack(u64 code, u64* out) const
{
    if (p_ == 2) {
        for (unsigned i = 0; i < m_; ++i)
            out[i] = (code >> i) & 1;
        return;
    }
    for (unsigned i = 0; i < m_; ++i) {
        out[i] = code % p_;
        code /= p_;
    }
}

u64 PrimePowerField::pack(const u64* digits) const
{
    u64 code = 0;
    for (unsigned i = m_; i-- > 0;)
        code = code * p_ + digits[i];
    return code;
}

FieldElement PrimePowerField::from_int(long long v) const
{
    long long r = v % static_cast<long long>(p_);
    if (r < 0)
        r += static_cast<long long>(p_);
    return { static_cast<u64>(r) };
}

FieldElement PrimePowerField::from_coords(std::span<const u64> coords) const
{
    if (coords.size() > m_)
        throw InvalidArgument("too many coordinates for field of degree " + std::to_string(m_));
    std::array<u64, kMaxDegree> d{};
    for (std::size_t i = 0; i < coords.size(); ++i)
        d[i] = coords[i] % p_;
    return { pack(d.data()) };
}

std::vector<u64> PrimePowerField::coords(FieldElement x) const
{
    std::vector<u64> out(m_);
    unpack(x.code, out.data());
    return out;
}

FieldElement PrimePowerField::add(FieldElement a, FieldElement b) const
{
    if (m_ == 1)
        return { (a.code + b.code) % p_ };
    if (p_ == 2)
        return { a.code ^ b.code };
    std::array<u64, kMaxDegree> x, y;
    unpack(a.code, x.data());
    unpack(b.code, y.data());
    for (unsigned i = 0; i < m_; ++i) {
        x[i] += y[i];
        if (x[i] >= p_)
            x[i] -= p_;
    }
    return { pack(x.data()) };
}

FieldElement PrimePowerField::neg(FieldElement a) const
{
    if (m_ == 1)
        return { a.code == 0 ? 0 : p_ - a.code };
    if (p_ == 2)
        return a;
    std::array<u64, kMaxDegree> x;
    unpack(a.code, x.data());
    for (unsigned i = 0; i < m_; ++i)
        x[i] = x[i] == 0 ? 0 : p_ - x[i];
    return { pack(x.data()) };
}

FieldElement PrimePowerField::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement PrimePowerField::mul_reduce(FieldElement a, FieldElement b) const
{
    if (m_ == 1)
        return { mul_mod(a.code, b.code, p_) };
    std::array<u64, kMaxDegree> x, y;
    unpack(a.code, x.data());
    unpack(b.code, y.data());
    // m (p-1)^2 < 2^64 whenever p^m <= 2^60, so the accumulators cannot wrap.
    std::array<u64, 2 * kMaxDegree> prod{};
    for (unsigned i = 0; i < m_; ++i) {
        if (x[i] == 0)
            continue;
        for (unsigned j = 0; j < m_; ++j)
            prod[i + j] += x[i] * y[j];
    }
    for (unsigned k = 0; k + 1 < 2 * m_; ++k)
        prod[k] %= p_;
    for (unsigned k = 2 * m_ - 2; k >= m_; --k) {
        const u64 c = prod[k];
        if (c == 0)
            continue;
        const unsigned shift = k - m_;
        for (unsigned i = 0; i < m_; ++i)
            prod[shift + i] = (prod[shift + i] + (p_ - c) * modulus_[i]) % p_;
        prod[k] = 0;
    }
    return { pack(prod.data()) };
}

FieldElement PrimePowerField::mul(FieldElement a, FieldElement b) const
{
    if (a.code == 0 || b.code == 0)
        return zero();
    if (!exp_.empty()) {
        u64 idx = static_cast<u64>(log_[a.code]) + log_[b.code];
        const u64 n = order_ - 1;
        if (idx >= n)
            idx -= n;
        return { exp_[idx] };
    }
    return mul_reduce(a, b);
}

FieldElement PrimePowerField::pow_reduce(FieldElement a, u64 e) const
{
    FieldElement result = one();
    while (e > 0) {
        if (e & 1)
            result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

FieldElement PrimePowerField::pow(FieldElement a, u64 e) const
{
    if (e == 0)
        return one();
    if (a.code == 0)
        return zero();
    const u64 n = order_ - 1;
    if (!exp_.empty())
        return { exp_[mul_mod(log_[a.code], e % n, n)] };
    return pow_reduce(a, e % n == 0 ? n : e % n);
}

FieldElement PrimePowerField::inv(FieldElement a) const
{
    if (a.code == 0)
        throw InvalidArgument("division by zero field element");
    if (!exp_.empty()) {
        const u64 n = order_ - 1;
        const u64 l = log_[a.code];
        return { exp_[l == 0 ? 0 : n - l] };
    }
    return pow_reduce(a, order_ - 2);
}

FieldElement PrimePowerField::div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

u64 PrimePowerField::element_order(FieldElement x) const
{
    if (x.code == 0)
        throw InvalidArgument("zero has no multiplicative order");
    u64 ord = order_ - 1;
    for (auto [l, k] : group_factors_) {
        for (unsigned i = 0; i < k; ++i) {
            if (pow(x, ord / l) == one())
                ord /= l;
            else
                break;
        }
    }
    return ord;
}

bool PrimePowerField::is_primitive(FieldElement x) const
{
    if (x.code == 0 || x.code >= order_)
        return false;
    const u64 n = order_ - 1;
    for (auto [l, k] : group_factors_) {
        if (pow_reduce(x, n / l) == one())
            return false;
    }
    return true;
}

bool PrimePowerField::same_as(const PrimePowerField& other) const
{
    return this == &other || (p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_);
}

std::string PrimePowerField::to_string(FieldElement x) const
{
    if (m_ == 1)
        return std::to_string(x.code);
    std::ostringstream os;
    os << '(';
    auto c = coords(x);
    for (unsigned i = 0; i < m_; ++i)
        os << (i ? "," : "") << c[i];
    os << ')';
    return os.str();
}

FieldPtr build_field(u64 p, unsigned m) { return std::make_shared<const PrimePowerField>(p, m); }

FieldPtr cached_field(u64 p, unsigned m)
{
    static std::mutex mutex;
    static std::map<std::pair<u64, unsigned>, FieldPtr> cache;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find({ p, m });
        if (it != cache.end())
            return it->second;
    }
    FieldPtr built = build_field(p, m);
    std::lock_guard lock(mutex);
    return cache.emplace(std::pair{ p, m }, std::move(built)).first->second;
}

FieldElement element_of_order(const PrimePowerField& field, u64 r)
{
    const u64 n = field.group_order();
    if (r == 0 || n % r != 0)
        throw InvalidArgument("order " + std::to_string(r) + " does not divide " + std::to_string(n));
    return field.pow(field.generator(), n / r);
}

FieldElement frobenius_conj(const PrimePowerField& field, FieldElement x)
{
    if (field.degree() % 2 != 0)
        throw InvalidArgument("conjugation needs a field of square order");
    const u64 q = checked_pow(field.characteristic(), field.degree() / 2);
    return field.pow(x, q);
}

Embedding::Embedding(FieldPtr base, FieldPtr target, std::vector<FieldElement> image)
    : base_(std::move(base)), target_(std::move(target))
{
    if (image.size() != base_->order())
        throw InvalidArgument("embedding image table has wrong size");
    auto preimage = std::make_shared<std::unordered_map<u64, u64>>();
    preimage->reserve(image.size());
    for (u64 code = 0; code < image.size(); ++code) {
        if (!preimage->emplace(image[code].code, code).second)
            throw VerificationFailure("embedding is not injective");
    }
    image_ = std::make_shared<const std::vector<FieldElement>>(std::move(image));
    preimage_ = std::move(preimage);
}

Embedding Embedding::identity(const FieldPtr& field)
{
    if (field->order() > PrimePowerField::kTableLimit)
        throw BudgetExceeded("identity embedding table too large");
    std::vector<FieldElement> image(field->order());
    for (u64 code = 0; code < image.size(); ++code)
        image[code] = { code };
    return Embedding(field, field, std::move(image));
}

FieldElement Embedding::apply(FieldElement x) const
{
    if (x.code >= image_->size())
        throw InvalidArgument("element does not belong to the embedding's base field");
    return (*image_)[x.code];
}

std::optional<FieldElement> Embedding::project(FieldElement y) const
{
    auto it = preimage_->find(y.code);
    if (it == preimage_->end())
        return std::nullopt;
    return FieldElement{ it->second };
}

bool extension_within_budget(const PrimePowerField& base, unsigned t)
{
    if (t == 0)
        return false;
    unsigned __int128 order = 1;
    for (unsigned i = 0; i < t; ++i) {
        order *= base.order();
        if (order > kExactBudget)
            return false;
    }
    return true;
}

FieldExtension extension_field(const FieldPtr& base, unsigned t)
{
    if (t == 0)
        throw InvalidArgument("extension degree must be at least 1");
    if (t == 1)
        return { base, Embedding::identity(base) };
    if (!extension_within_budget(*base, t))
        throw BudgetExceeded("extension of degree " + std::to_string(t) + " exceeds 2^60");
    if (base->order() > PrimePowerField::kTableLimit)
        throw BudgetExceeded("base field too large for an embedding table");

    const u64 p = base->characteristic();
    const unsigned m = base->degree();
    FieldPtr big = cached_field(p, m * t);

    std::vector<FieldElement> image(base->order());
    if (m == 1) {
        for (u64 c = 0; c < image.size(); ++c)
            image[c] = big->from_int(static_cast<long long>(c));
        return { big, Embedding(base, big, std::move(image)) };
    }

    // The subfield of order p^m is generated by G^((P-1)/(p^m-1)); the first
    // power in that cyclic order which is a root of the base modulus is where
    // the base's polynomial variable goes.
    const FieldElement sub_gen = big->pow(big->generator(), big->group_order() / base->group_order());
    const auto& f = base->modulus();
    auto eval_modulus = [&](FieldElement x) {
        FieldElement acc = big->zero();
        for (std::size_t i = f.size(); i-- > 0;)
            acc = big->add(big->mul(acc, x), big->from_int(static_cast<long long>(f[i])));
        return acc;
    };
    std::optional<FieldElement> root;
    FieldElement x = big->one();
    for (u64 i = 0; i < base->group_order(); ++i) {
        if (big->is_zero(eval_modulus(x))) {
            root = x;
            break;
        }
        x = big->mul(x, sub_gen);
    }
    if (!root)
        throw VerificationFailure("base modulus has no root in the extension");

    std::vector<FieldElement> powers(m);
    powers[0] = big->one();
    for (unsigned i = 1; i < m; ++i)
        powers[i] = big->mul(powers[i - 1], *root);
    std::vector<u64> c(m);
    for (u64 code = 0; code < image.size(); ++code) {
        c = base->coords({ code });
        FieldElement acc = big->zero();
        for (unsigned i = 0; i < m; ++i) {
            if (c[i] != 0)
                acc = big->add(acc, big->mul(big->from_int(static_cast<long long>(c[i])), powers[i]));
        }
        image[code] = acc;
    }
    return { big, Embedding(base, big, std::move(image)) };
}

FieldExtension cached_extension(const FieldPtr& base, unsigned t)
{
    static std::mutex mutex;
    static std::map<std::tuple<u64, unsigned, unsigned>, std::shared_ptr<const FieldExtension>> cache;
    const auto key = std::tuple{ base->characteristic(), base->degree(), t };
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end() && it->second->embedding.base()->same_as(*base))
            return *it->second;
    }
    auto built = std::make_shared<const FieldExtension>(extension_field(base, t));
    std::lock_guard lock(mutex);
    cache.insert_or_assign(key, built);
    return *built;
}

} // namespace qmds
