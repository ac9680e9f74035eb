#include "sumset/families.hpp"

#include <algorithm>
#include <utility>

namespace sumset {

namespace {

struct FamilyDef {
    FamilyInfo info;
    PolyRing ring;
    Poly denominator;
    std::vector<Poly> a, b;
    std::vector<std::pair<std::size_t, std::size_t>> exempt; // 1-indexed cells
};

Poly sq(const Poly& x) { return x * x; }

FamilyDef make_lagrange44() {
    PolyRing R({"u", "v"});
    Poly u = R.var(0), v = R.var(1);
    FamilyDef d{{FamilyId::lagrange44, "lagrange44", {"u", "v"}, 4, 4, false},
                R,
                R.constant(1),
                {},
                {},
                {}};
    d.a = {
        9 * sq(18 * u * u + 50 * u * v + 37 * v * v),
        36 * sq(u * u + 13 * u * v + 16 * v * v),
        36 * sq(9 * u * u + 53 * u * v + 64 * v * v),
        4 * sq(3 * u * u - 25 * u * v - 48 * v * v),
    };
    d.b = {
        R.zero(),
        20 * (u - 4 * v) * (11 * u + 19 * v) * (u + 4 * v) * (u + v),
        36 * (3 * u + 11 * v) * (7 * u + 12 * v) * (3 * u + 4 * v) * (u + v),
        756 * (u - v) * (3 * u + 2 * v) * (u + 3 * v) * (u + 2 * v),
    };
    return d;
}

FamilyDef make_triple33_v1() {
    PolyRing R({"p", "q", "r", "s"});
    Poly p = R.var(0), q = R.var(1), r = R.var(2), s = R.var(3);
    FamilyDef d{{FamilyId::triple33_v1, "triple33_v1", {"p", "q", "r", "s"}, 3, 3, false},
                R,
                R.constant(1),
                {},
                {},
                {}};
    d.a = {
        R.zero(),
        16 * p * q * r * s,
        (p + q + r + s) * (p + q - r - s) * (p - q + r - s) * (p - q - r + s),
    };
    d.b = {
        4 * sq(p * r - q * s),
        4 * sq(p * s - q * r),
        4 * sq(p * q - r * s),
    };
    return d;
}

FamilyDef make_triple33_v2() {
    PolyRing R({"p", "q", "r", "s"});
    Poly p = R.var(0), q = R.var(1), r = R.var(2), s = R.var(3);
    FamilyDef d{{FamilyId::triple33_v2, "triple33_v2", {"p", "q", "r", "s"}, 3, 3, false},
                R,
                R.constant(1),
                {},
                {},
                {}};
    d.a = {
        -((p + q + r + s) * (p + q - r - s) * (p - q + r - s) * (p - q - r + s)),
        -((p - q + r + s) * (p - q - r - s) * (p + q + r - s) * (p + q - r + s)),
        R.zero(),
    };
    d.b = {
        sq(p * p - q * q + r * r - s * s),
        sq(p * p - q * q - r * r + s * s),
        sq(p * p + q * q - r * r - s * s),
    };
    return d;
}

FamilyDef make_triple33_v3() {
    PolyRing R({"p", "q", "r", "s"});
    Poly p = R.var(0), q = R.var(1), r = R.var(2), s = R.var(3);
    FamilyDef d{{FamilyId::triple33_v3, "triple33_v3", {"p", "q", "r", "s"}, 3, 3, false},
                R,
                R.constant(1),
                {},
                {},
                {}};
    d.a = {
        4 * sq(p * s - q * r),
        4 * sq(p * s + q * r),
        sq(p * p - q * q - r * r + s * s),
    };
    d.b = {
        4 * (p * p - q * q) * (r * r - s * s),
        R.zero(),
        4 * (p * p - r * r) * (q * q - s * s),
    };
    return d;
}

FamilyDef make_triple33_shift() {
    PolyRing R({"p", "q", "r", "s", "t"});
    Poly p = R.var(0), q = R.var(1), r = R.var(2), s = R.var(3), t = R.var(4);
    FamilyDef d{{FamilyId::triple33_shift,
                 "triple33_shift",
                 {"p", "q", "r", "s", "t"},
                 3,
                 3,
                 false},
                R,
                R.constant(1),
                {},
                {},
                {}};
    d.a = {
        4 * sq(p * r - q * s) - t,
        4 * sq(p * r + q * s) - t,
        sq(p * p - q * q + r * r - s * s) - t,
    };
    d.b = {
        t,
        t - 4 * (p * p - q * q) * (r * r - s * s),
        t + 4 * (p * p - s * s) * (q * q - r * r),
    };
    return d;
}

FamilyDef make_quint53() {
    PolyRing R({"f", "g", "m", "u1", "u2", "v1", "v2"});
    Poly f = R.var(0), g = R.var(1), m = R.var(2);
    Poly u1 = R.var(3), u2 = R.var(4), v1 = R.var(5), v2 = R.var(6);
    Poly f2 = f * f, g2 = g * g, m2 = m * m;
    Poly u1s = u1 * u1, u2s = u2 * u2, v1s = v1 * v1, v2s = v2 * v2;
    FamilyDef d{{FamilyId::quint53,
                 "quint53",
                 {"f", "g", "m", "u1", "u2", "v1", "v2"},
                 5,
                 3,
                 false},
                R,
                R.constant(1),
                {},
                {},
                {}};
    Poly uv_minus = u1 * v1 - u2 * v2;
    Poly uv_plus = u1 * v1 + u2 * v2;
    Poly vu_minus = u1 * v2 - u2 * v1;
    Poly vu_plus = u1 * v2 + u2 * v1;
    Poly core_minus = m2 * u1 * u2 * v1 * v2 - 1;
    Poly core_plus = m2 * u1 * u2 * v1 * v2 + 1;
    d.a = {
        4 * sq(m * u1 * u2 * uv_minus * f2 - vu_minus * core_minus * f * g -
               m * v1 * v2 * uv_minus * g2),
        4 * sq(m * u1 * u2 * uv_plus * f2 + vu_plus * core_plus * f * g +
               m * v1 * v2 * uv_plus * g2),
        sq((u1s * u2s * (v1s - v2s) * m2 + u1s - u2s) * f2 -
           (v1s * v2s * (u1s - u2s) * m2 + v1s - v2s) * g2),
        4 * sq(m * u1 * u2 * uv_minus * f2 + vu_minus * core_minus * f * g -
               m * v1 * v2 * uv_minus * g2),
        4 * sq(m * u1 * u2 * uv_plus * f2 - vu_plus * core_plus * f * g +
               m * v1 * v2 * uv_plus * g2),
    };
    d.b = {
        R.zero(),
        -4 * (u1s - u2s) * (v1s - v2s) * (m2 * u1s * u2s * f2 - g2) *
            (f2 - m2 * v1s * v2s * g2),
        4 * (m2 * u1s * v1s - 1) * (m2 * u2s * v2s - 1) * (f2 * u1s - g2 * v1s) *
            (f2 * u2s - g2 * v2s),
    };
    return d;
}

// Stored multiplied by m^2; the two exempt cells are the sums (3,4), (4,3).
FamilyDef make_quad44_partial() {
    PolyRing R({"m", "p", "q", "r", "s"});
    Poly m = R.var(0), p = R.var(1), q = R.var(2), r = R.var(3), s = R.var(4);
    Poly m2 = m * m;
    Poly p2 = p * p, q2 = q * q, r2 = r * r, s2 = s * s;
    FamilyDef d{{FamilyId::quad44_partial,
                 "quad44_partial",
                 {"m", "p", "q", "r", "s"},
                 4,
                 4,
                 true},
                R,
                m2,
                {},
                {},
                {{3, 4}, {4, 3}}};
    d.a = {
        m2 * (4 * sq(p * r - q * s)),
        m2 * (4 * sq(p * r + q * s)),
        m2 * sq(p2 - q2 + r2 - s2),
        sq(m2 * p2 - m2 * q2 + r2 - s2),
    };
    d.b = {
        R.zero(),
        m2 * (-4 * (p2 - q2) * (r2 - s2)),
        m2 * (4 * (p2 - s2) * (q2 - r2)),
        4 * (m2 * p2 - s2) * (m2 * q2 - r2),
    };
    return d;
}

FamilyDef make_quad44_a() {
    PolyRing R({"u1", "u2", "v1", "v2"});
    Poly u1 = R.var(0), u2 = R.var(1), v1 = R.var(2), v2 = R.var(3);
    Poly u1s = u1 * u1, u2s = u2 * u2, v1s = v1 * v1, v2s = v2 * v2;
    Poly vsum = v1s + v2s, vdiff = v1s - v2s;
    Poly quart = v1s * v1s - 6 * v1s * v2s + v2s * v2s;
    FamilyDef d{{FamilyId::quad44_a, "quad44_a", {"u1", "u2", "v1", "v2"}, 4, 4, false},
                R,
                R.constant(1),
                {},
                {},
                {}};
    d.a = {
        sq(quart) * sq(vdiff) * sq(u1s + u2s),
        sq(quart) * sq(vsum) * sq(u1s - u2s),
        sq(vdiff) * sq(vsum * u1s - 16 * u1 * u2 * v1s * v2s - vsum * u2s),
        sq(vdiff) * sq(vsum * u1s + 16 * u1 * u2 * v1s * v2s - vsum * u2s),
    };
    d.b = {
        R.zero(),
        sq(quart) * ((v2 - v1) * u1 + (v1 + v2) * u2) *
            ((v1 + v2) * u1 + (v1 - v2) * u2) * ((v1 - v2) * u1 + (v1 + v2) * u2) *
            ((v1 + v2) * u1 - (v1 - v2) * u2),
        -(sq(vdiff) * (vsum * u1 + 4 * u1 * v1 * v2 - vsum * u2) *
          (vsum * u1 - 4 * u1 * v1 * v2 - vsum * u2) *
          (vsum * u1 + 4 * u2 * v1 * v2 + vsum * u2) *
          (vsum * u1 - 4 * u2 * v1 * v2 + vsum * u2)),
        -(sq(vdiff) * (vsum * u1 + 4 * u1 * v1 * v2 + vsum * u2) *
          (vsum * u1 - 4 * u1 * v1 * v2 + vsum * u2) *
          (vsum * u1 + 4 * u2 * v1 * v2 - vsum * u2) *
          (vsum * u1 - 4 * u2 * v1 * v2 - vsum * u2)),
    };
    return d;
}

FamilyDef make_quad44_b() {
    PolyRing R({"m", "q", "r"});
    Poly m = R.var(0), q = R.var(1), r = R.var(2);
    Poly m2 = m * m, m3 = m2 * m, m4 = m2 * m2;
    Poly m6 = m4 * m2, m8 = m4 * m4;
    Poly lead = 16 * m2 * sq(m4 - 1);
    FamilyDef d{{FamilyId::quad44_b, "quad44_b", {"m", "q", "r"}, 4, 4, false},
                R,
                R.constant(1),
                {},
                {},
                {}};
    d.a = {
        lead * sq((5 * m4 - 2 * m2 + 1) * q * q -
                  2 * ((m4 - 6 * m2 + 1) * q * r) + (m4 - 2 * m2 + 5) * r * r),
        lead * sq((5 * m4 - 2 * m2 + 1) * q * q - (m4 - 2 * m2 + 5) * r * r),
        lead * sq((7 * m4 - 2 * m2 - 1) * q * q -
                  (2 * m4 - 12 * m2 + 2) * q * r - (m4 + 2 * m2 - 7) * r * r),
        sq(m2 - 1) * sq((3 * m8 + 40 * m6 - 26 * m4 - 1) * q * q +
                        2 * (sq(m4 - 6 * m2 + 1) * q * r) -
                        (m8 + 26 * m4 - 40 * m2 - 3) * r * r),
    };
    d.b = {
        R.zero(),
        -4 * m2 * ((m4 + 6 * m2 - 3) * q + (m4 - 2 * m2 + 5) * r) *
            ((3 * m4 - 6 * m2 - 1) * q - (m4 - 2 * m2 + 5) * r) *
            ((5 * m4 - 2 * m2 + 1) * q - (3 * m4 - 6 * m2 - 1) * r) *
            ((5 * m4 - 2 * m2 + 1) * q + (m4 + 6 * m2 - 3) * r),
        -128 * m2 * (m4 - 1).pow(3) * (q * q - r * r) *
            (3 * m2 * q - m2 * r - q + 3 * r) * (m2 * q + r),
        16 * sq(m2 + 1) * (m2 - 1).pow(3) * (m2 * q * q - r * r) *
            ((m4 + 6 * m3 - 2 * m - 1) * q - (m4 + 2 * m3 - 6 * m - 1) * r) *
            ((m4 - 6 * m3 + 2 * m - 1) * q - (m4 - 2 * m3 + 6 * m - 1) * r),
    };
    return d;
}

FamilyDef make_quad44_c() {
    PolyRing R({"m", "q", "r"});
    Poly m = R.var(0), q = R.var(1), r = R.var(2);
    Poly m2 = m * m, m3 = m2 * m, m4 = m2 * m2, m5 = m4 * m;
    Poly m6 = m4 * m2, m7 = m6 * m, m8 = m4 * m4, m9 = m8 * m, m10 = m8 * m2;
    Poly lead = 16 * m2 * sq(m4 - 1);
    FamilyDef d{{FamilyId::quad44_c, "quad44_c", {"m", "q", "r"}, 4, 4, false},
                R,
                R.constant(1),
                {},
                {},
                {}};
    d.a = {
        lead * sq((m6 - 2 * m4 + 5 * m2) * q * q +
                  (2 * m5 - 12 * m3 + 2 * m) * q * r +
                  (5 * m4 - 2 * m2 + 1) * r * r),
        lead * sq((m6 - 2 * m4 + 5 * m2) * q * q - (5 * m4 - 2 * m2 + 1) * r * r),
        sq(m2 - 1) * sq((m10 + 26 * m6 - 40 * m4 - 3 * m2) * q * q +
                        (2 * m9 - 24 * m7 + 76 * m5 - 24 * m3 + 2 * m) * q * r -
                        (3 * m8 + 40 * m6 - 26 * m4 - 1) * r * r),
        lead * sq((m6 + 2 * m4 - 7 * m2) * q * q -
                  (2 * m5 - 12 * m3 + 2 * m) * q * r - (7 * m4 - 2 * m2 - 1) * r * r),
    };
    d.b = {
        R.zero(),
        -4 * m2 * ((m5 + 6 * m3 - 3 * m) * q - (5 * m4 - 2 * m2 + 1) * r) *
            ((3 * m5 - 6 * m3 - m) * q + (5 * m4 - 2 * m2 + 1) * r) *
            ((m5 - 2 * m3 + 5 * m) * q + (3 * m4 - 6 * m2 - 1) * r) *
            ((m5 - 2 * m3 + 5 * m) * q - (m4 + 6 * m2 - 3) * r),
        -16 * m2 * sq(m2 + 1) * (m2 - 1).pow(3) * (q * q - r * r) *
            ((m5 - 2 * m4 + 6 * m2 - m) * q + (m4 - 6 * m3 + 2 * m - 1) * r) *
            ((m5 + 2 * m4 - 6 * m2 - m) * q + (m4 + 6 * m3 - 2 * m - 1) * r),
        128 * m3 * (m4 - 1).pow(3) * (m * r - q) * (m2 * q * q - r * r) *
            ((m3 - 3 * m) * q + (3 * m2 - 1) * r),
    };
    return d;
}

const std::vector<FamilyDef>& table() {
    static const std::vector<FamilyDef> defs = [] {
        std::vector<FamilyDef> v;
        v.push_back(make_lagrange44());
        v.push_back(make_triple33_v1());
        v.push_back(make_triple33_v2());
        v.push_back(make_triple33_v3());
        v.push_back(make_triple33_shift());
        v.push_back(make_quint53());
        v.push_back(make_quad44_partial());
        v.push_back(make_quad44_a());
        v.push_back(make_quad44_b());
        v.push_back(make_quad44_c());
        return v;
    }();
    return defs;
}

const FamilyDef& def_of(FamilyId id) {
    for (const FamilyDef& d : table())
        if (d.info.id == id) return d;
    throw domain_error("unknown family id");
}

void check_excluded(FamilyId id, const std::vector<Integer>& params) {
    switch (id) {
        case FamilyId::quad44_partial:
            if (params[0] == 0)
                throw domain_error("quad44_partial: m must be nonzero");
            break;
        case FamilyId::quad44_b:
        case FamilyId::quad44_c:
            if (params[0] == 0 || params[0] == 1 || params[0] == -1)
                throw domain_error("quad44 families: m must not be 0, 1 or -1");
            break;
        default:
            break;
    }
}

} // namespace

const std::vector<FamilyInfo>& family_catalogue() {
    static const std::vector<FamilyInfo> infos = [] {
        std::vector<FamilyInfo> v;
        for (const FamilyDef& d : table()) v.push_back(d.info);
        return v;
    }();
    return infos;
}

const FamilyInfo& family_info(FamilyId id) { return def_of(id).info; }

FamilyId family_from_name(const std::string& name) {
    for (const FamilyDef& d : table())
        if (d.info.name == name) return d.info.id;
    throw domain_error("unknown family '" + name + "'");
}

FamilyOutput generate(FamilyId id, const std::vector<Integer>& params) {
    const FamilyDef& def = def_of(id);
    if (params.size() != def.info.params.size())
        throw domain_error(def.info.name + " expects " +
                           std::to_string(def.info.params.size()) + " parameters, got " +
                           std::to_string(params.size()));
    check_excluded(id, params);

    std::vector<Ratio> point;
    point.reserve(params.size());
    for (const Integer& v : params) point.emplace_back(v);

    Ratio denom = def.denominator.eval(point);

    FamilyOutput out{{}, false, id, params};
    out.pair.a.reserve(def.a.size());
    out.pair.b.reserve(def.b.size());
    for (const Poly& p : def.a) out.pair.a.push_back(p.eval(point) / denom);
    for (const Poly& p : def.b) out.pair.b.push_back(p.eval(point) / denom);
    out.degenerate = has_duplicates(out.pair.a) || has_duplicates(out.pair.b);
    return out;
}

SymbolicSystem symbolic_system(FamilyId id) {
    const FamilyDef& def = def_of(id);
    SymbolicSystem sys{id, def.ring, def.denominator, {}, {}};
    for (std::size_t i = 0; i < def.a.size(); ++i)
        sys.elements.push_back({"a_" + std::to_string(i + 1), def.a[i], false});
    for (std::size_t j = 0; j < def.b.size(); ++j)
        sys.elements.push_back({"b_" + std::to_string(j + 1), def.b[j], false});
    for (std::size_t i = 0; i < def.a.size(); ++i) {
        for (std::size_t j = 0; j < def.b.size(); ++j) {
            bool exempt =
                std::find(def.exempt.begin(), def.exempt.end(),
                          std::make_pair(i + 1, j + 1)) != def.exempt.end();
            sys.sums.push_back({"a_" + std::to_string(i + 1) + "+b_" +
                                    std::to_string(j + 1),
                                def.a[i] + def.b[j], exempt});
        }
    }
    return sys;
}

namespace {

const Poly& phi_poly() {
    static const Poly phi = [] {
        PolyRing R({"t", "u1", "u2", "v1", "v2"});
        Poly t = R.var(0), u1 = R.var(1), u2 = R.var(2), v1 = R.var(3), v2 = R.var(4);
        Poly t2 = t * t;
        Poly vsum = sq(v1 * v1 + v2 * v2);
        Poly vodd = v1 * v2 * (v1 * v1 - v2 * v2);
        return (t2 - 1) *
               ((t2 - 1) * vsum * u1.pow(4) - 16 * ((t2 + 1) * vodd * u1.pow(3) * u2) +
                2 * ((t2 - 1) * vsum * sq(u1) * sq(u2)) +
                16 * ((t2 + 1) * vodd * u1 * u2.pow(3)) + (t2 - 1) * vsum * u2.pow(4));
    }();
    return phi;
}

} // namespace

Ratio phi(const Ratio& t, const Integer& u1, const Integer& u2, const Integer& v1,
          const Integer& v2) {
    std::vector<Ratio> point{t, Ratio(u1), Ratio(u2), Ratio(v1), Ratio(v2)};
    return phi_poly().eval(point);
}

bool discriminant_check(const Integer& m) {
    if (m == 0 || m == 1 || m == -1)
        throw domain_error("discriminant_check: m must not be 0, 1 or -1");
    Ratio mm(m);
    Ratio t = Ratio(2 * (m + 1), m * m + 1);
    Ratio mp1 = mm + Ratio(1);
    Ratio d = mp1 * mp1 * mm * mm * pow(t, 4) - 8 * mm * mm * mp1 * pow(t, 3) +
              6 * mp1 * mp1 * mm * pow(t, 2) - 8 * mm * mp1 * t + mp1 * mp1;
    if (!is_square(d)) return false;

    auto quadratic = [&](const Ratio& n) {
        return (mm - Ratio(1)) * n * n +
               (mm * mm * t * t + mm * t * t - 4 * mm * t + mm + Ratio(1)) * n -
               mm * t * t * (mm - Ratio(1));
    };
    Ratio n1 = Ratio(4 * m * (m * m - 1), (m * m + 1) * (m * m + 1));
    Ratio n2 = Ratio(-(m + 1), m - 1);
    return quadratic(n1).is_zero() && quadratic(n2).is_zero();
}

} // namespace sumset
