#include "pdd/signatures.hpp"

#include <sstream>

namespace pdd {

std::string Signature::str() const {
    std::ostringstream os;
    os << "(" << idx[0] << "," << idx[1] << "," << idx[2] << "," << idx[3] << ")";
    return os.str();
}

std::string to_string(SigClass c) {
    switch (c) {
        case SigClass::BothZero: return "BothZero";
        case SigClass::P1ZeroOnly: return "P1ZeroOnly";
        case SigClass::P2ZeroOnly: return "P2ZeroOnly";
        case SigClass::NeitherZero: return "NeitherZero";
    }
    return "?";
}

std::string PatternSet::str() const {
    switch (kind) {
        case Kind::All: return "All";
        case Kind::Empty: return "Empty";
        case Kind::Ray: {
            std::ostringstream os;
            os << "Ray(" << rays[0][0] << "," << rays[0][1] << "," << rays[0][2] << ")";
            return os.str();
        }
        case Kind::RayUnion: {
            std::ostringstream os;
            os << "RayUnion[";
            for (std::size_t i = 0; i < rays.size(); ++i) {
                if (i) os << ", ";
                os << "(" << rays[i][0] << "," << rays[i][1] << "," << rays[i][2] << ")";
            }
            os << "]";
            return os.str();
        }
        case Kind::CurveLocus: return "CurveLocus(" + locus.str() + ")";
    }
    return "?";
}

const std::vector<std::string>& SignatureEngine::xyz_vars() {
    static const std::vector<std::string> v = {"X", "Y", "Z"};
    return v;
}

namespace {

IntPoly lin3(long cx, long cy, long cz) {
    return IntPoly::linear(SignatureEngine::xyz_vars(),
                           {mpz_class(cx), mpz_class(cy), mpz_class(cz)});
}

}  // namespace

namespace loci {

const IntPoly& two_x2_xz_yz() {
    static const IntPoly p = [] {
        IntPoly q(SignatureEngine::xyz_vars());
        q.add_term({2, 0, 0}, 2);
        q.add_term({1, 0, 1}, 1);
        q.add_term({0, 1, 1}, -1);
        return q;
    }();
    return p;
}

const IntPoly& x2_yz() {
    static const IntPoly p = [] {
        IntPoly q(SignatureEngine::xyz_vars());
        q.add_term({2, 0, 0}, 1);
        q.add_term({0, 1, 1}, -1);
        return q;
    }();
    return p;
}

const IntPoly& x2_xz_y2() {
    static const IntPoly p = [] {
        IntPoly q(SignatureEngine::xyz_vars());
        q.add_term({2, 0, 0}, 1);
        q.add_term({1, 0, 1}, 1);
        q.add_term({0, 2, 0}, -1);
        return q;
    }();
    return p;
}

const IntPoly& cubic_one() {
    static const IntPoly p = [] {
        IntPoly q(SignatureEngine::xyz_vars());
        q.add_term({3, 0, 0}, 2);
        q.add_term({2, 1, 0}, 4);
        q.add_term({2, 0, 1}, 1);
        q.add_term({1, 2, 0}, 2);
        q.add_term({0, 2, 1}, -1);
        q.add_term({0, 1, 2}, -1);
        return q;
    }();
    return p;
}

const IntPoly& cubic_two() {
    static const IntPoly p = [] {
        IntPoly q(SignatureEngine::xyz_vars());
        q.add_term({3, 0, 0}, 4);
        q.add_term({2, 1, 0}, 4);
        q.add_term({2, 0, 1}, 4);
        q.add_term({1, 1, 1}, 2);
        q.add_term({1, 0, 2}, 1);
        q.add_term({0, 2, 1}, -1);
        return q;
    }();
    return p;
}

}  // namespace loci

SignatureEngine::SignatureEngine() {
    const auto X = lin3(1, 0, 0);
    const auto Y = lin3(0, 1, 0);
    // a1 = -Y(X+Z)(X+Y+Z), a2 = (X+Y)(X+Z)(2X+Y+Z),
    // a3 = -X(2X+Y+Z)(X+Y+Z), a4 = XY(X+Y)
    IntPoly a1 = -(Y * lin3(1, 0, 1) * lin3(1, 1, 1));
    IntPoly a2 = lin3(1, 1, 0) * lin3(1, 0, 1) * lin3(2, 1, 1);
    IntPoly a3 = -(X * lin3(2, 1, 1) * lin3(1, 1, 1));
    IntPoly a4 = X * Y * lin3(1, 1, 0);
    a_[4] = IntPoly::zero(xyz_vars());
    a_[5] = a1; a_[6] = a2; a_[7] = a3; a_[8] = a4;
    a_[3] = -a1; a_[2] = -a2; a_[1] = -a3; a_[0] = -a4;
    k_[0] = lin3(1, 0, 0);
    k_[1] = lin3(1, 1, 0);
    k_[2] = lin3(2, 1, 1);
}

SigPolys SignatureEngine::build(const Signature& I) const {
    SigPolys r;
    r.p1 = a_poly(I.idx[0]) + a_poly(I.idx[1]) + a_poly(I.idx[2]) + a_poly(I.idx[3]);
    IntPoly cross =
        a_poly(I.idx[1]) * k_[0] + a_poly(I.idx[2]) * k_[1] + a_poly(I.idx[3]) * k_[2];
    r.p2 = cross * mpz_class(2);
    r.p3 = a_poly(I.idx[1]) * (k_[0] * k_[0]) + a_poly(I.idx[2]) * (k_[1] * k_[1]) +
           a_poly(I.idx[3]) * (k_[2] * k_[2]);
    return r;
}

SigClass SignatureEngine::classify(const Signature& I) const {
    SigPolys p = build(I);
    if (p.p1.is_zero()) return p.p2.is_zero() ? SigClass::BothZero : SigClass::P1ZeroOnly;
    return p.p2.is_zero() ? SigClass::P2ZeroOnly : SigClass::NeitherZero;
}

PatternSet SignatureEngine::known_pattern_set(const Signature& I) {
    struct Entry {
        Signature sig;
        PatternSet set;
    };
    static const std::vector<Entry> table = [] {
        std::vector<Entry> t;
        auto put = [&t](Signature s, PatternSet ps) {
            t.push_back({s, ps});
            t.push_back({s.negated(), ps});
        };
        t.push_back({{0, 0, 0, 0}, PatternSet::all()});
        put({1, 2, 3, 4}, PatternSet::all());
        put({3, 2, 1, 4}, PatternSet::curve(loci::two_x2_xz_yz()));
        put({3, -3, -1, 1}, PatternSet::curve(loci::x2_yz()));
        put({2, 3, -2, -3}, PatternSet::curve(loci::x2_xz_y2()));
        put({2, 1, -2, -1}, PatternSet::curve(loci::cubic_one()));
        put({3, -1, 1, -3}, PatternSet::curve(loci::cubic_two()));
        put({3, 2, 3, 4}, PatternSet::curve(loci::two_x2_xz_yz()));
        put({1, 2, 1, 4}, PatternSet::curve(loci::two_x2_xz_yz()));
        put({1, -3, 1, 0}, PatternSet::ray(1, 1, 1));
        put({1, 0, -3, 1}, PatternSet::ray(1, 1, 1));
        put({0, 3, 2, 3}, PatternSet::ray(1, 3, 2));
        put({3, 0, -1, 3}, PatternSet::ray(1, 4, 4));
        put({4, 0, 1, 4}, PatternSet::ray(2, 1, 1));
        return t;
    }();
    for (const auto& e : table)
        if (e.sig == I) return e.set;
    return PatternSet::empty();
}

std::vector<SignatureRecord> SignatureEngine::census() const {
    std::vector<SignatureRecord> out;
    out.reserve(Signature::kCount);
    for (int f = 0; f < Signature::kCount; ++f) {
        SignatureRecord rec;
        rec.signature = Signature::from_flat(f);
        rec.polys = build(rec.signature);
        if (rec.polys.p1.is_zero())
            rec.cls = rec.polys.p2.is_zero() ? SigClass::BothZero : SigClass::P1ZeroOnly;
        else
            rec.cls = rec.polys.p2.is_zero() ? SigClass::P2ZeroOnly : SigClass::NeitherZero;
        rec.pattern_set = known_pattern_set(rec.signature);
        out.push_back(std::move(rec));
    }
    return out;
}

SignatureEngine::AVals SignatureEngine::a_values(long long x, long long y, long long z) {
    using I128 = __int128;
    I128 a1 = -I128(y) * (x + z) * (x + y + z);
    I128 a2 = I128(x + y) * (x + z) * (2 * x + y + z);
    I128 a3 = -I128(x) * (2 * x + y + z) * (x + y + z);
    I128 a4 = I128(x) * y * (x + y);
    return {-a4, -a3, -a2, -a1, 0, a1, a2, a3, a4};
}

__int128 SignatureEngine::p1_at(const AVals& a, const Signature& I) {
    return a[I.idx[0] + 4] + a[I.idx[1] + 4] + a[I.idx[2] + 4] + a[I.idx[3] + 4];
}

__int128 SignatureEngine::p2_at(const AVals& a, long long k1, long long k2, long long k3,
                                const Signature& I) {
    return 2 * (a[I.idx[1] + 4] * k1 + a[I.idx[2] + 4] * k2 + a[I.idx[3] + 4] * k3);
}

__int128 SignatureEngine::p3_at(const AVals& a, long long k1, long long k2, long long k3,
                                const Signature& I) {
    using I128 = __int128;
    return a[I.idx[1] + 4] * (I128(k1) * k1) + a[I.idx[2] + 4] * (I128(k2) * k2) +
           a[I.idx[3] + 4] * (I128(k3) * k3);
}

} // namespace pdd
