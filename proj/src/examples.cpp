#include "hopfcalc/examples.hpp"

#include <algorithm>
#include <sstream>

#include "hopfcalc/convolution.hpp"

namespace hopf::examples {

namespace {

using Entries = std::vector<SparseTensor3::Entry>;

void validate(const Object& o, const std::string& what) {
    auto r = o.check();
    if (!r.ok()) throw Error("example '" + what + "' failed validation: " + r.detail);
}

Object validated(Object o, const std::string& what) {
    validate(o, what);
    return o;
}

}  // namespace

HopfAlgebra group_algebra(const FieldSpec& f, const std::vector<std::vector<int>>& table,
                          std::vector<std::string> names) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw Error("group_algebra: empty table");
    Entries mult, comult;
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table[i].size()) != n) throw Error("group_algebra: ragged table");
        for (int j = 0; j < n; ++j) {
            if (table[i][j] < 0 || table[i][j] >= n) throw Error("group_algebra: bad table entry");
            mult.push_back({i, j, table[i][j], Scalar::one(f)});
        }
        comult.push_back({i, i, i, Scalar::one(f)});
    }
    std::vector<Scalar> unit(n, Scalar::zero(f));
    unit[0] = Scalar::one(f);
    std::vector<Scalar> counit(n, Scalar::one(f));

    // Inverse permutation: S(g) = g^-1.
    Matrix S(f, n, n);
    for (int i = 0; i < n; ++i) {
        int inv = -1;
        for (int j = 0; j < n; ++j)
            if (table[i][j] == 0) inv = j;
        if (inv == -1 || table[inv][i] != 0)
            throw Error("group_algebra: table is not a group (missing inverse)");
        S.at(inv, i) = Scalar::one(f);
    }

    Algebra alg{f, n, SparseTensor3::from_entries(n, n, n, std::move(mult)), unit, names};
    Coalgebra coa{f, n, SparseTensor3::from_entries(n, n, n, std::move(comult)), counit, names};
    HopfAlgebra h{Bialgebra{std::move(alg), std::move(coa)}, std::move(S)};
    validate(Object(h), "group_algebra");
    return h;
}

HopfAlgebra cyclic_group_algebra(const FieldSpec& f, int n) {
    if (n < 1) throw Error("cyclic_group_algebra: order must be positive");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
        names[i] = i == 0 ? "1" : (i == 1 ? "g" : "g" + std::to_string(i));
    }
    return group_algebra(f, table, names);
}

HopfAlgebra symmetric3_group_algebra(const FieldSpec& f) {
    // Permutations of {0,1,2} in one-line notation.
    const int perms[6][3] = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    const std::vector<std::string> names = {"1", "s12", "s13", "s23", "c123", "c132"};
    auto compose = [&](int a, int b) {  // (a after b)
        int r[3];
        for (int x = 0; x < 3; ++x) r[x] = perms[a][perms[b][x]];
        for (int k = 0; k < 6; ++k)
            if (r[0] == perms[k][0] && r[1] == perms[k][1] && r[2] == perms[k][2]) return k;
        throw Error("symmetric3: composition error");
    };
    std::vector<std::vector<int>> table(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) table[i][j] = compose(i, j);
    return group_algebra(f, table, names);
}

HopfAlgebra sweedler(const FieldSpec& f) {
    if (f.characteristic() == 2) throw Error("sweedler: characteristic 2 is not allowed");
    // Basis 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx.
    const Scalar one = Scalar::one(f);
    const Scalar minus = -one;
    Entries mult = {
        {0, 0, 0, one}, {0, 1, 1, one}, {0, 2, 2, one}, {0, 3, 3, one},
        {1, 0, 1, one}, {1, 1, 0, one}, {1, 2, 3, one}, {1, 3, 2, one},
        {2, 0, 2, one}, {2, 1, 3, minus},
        {3, 0, 3, one}, {3, 1, 2, minus},
    };
    Entries comult = {
        {0, 0, 0, one},            // Delta(1) = 1 (x) 1
        {1, 1, 1, one},            // Delta(g) = g (x) g
        {2, 2, 0, one}, {2, 1, 2, one},  // Delta(x) = x (x) 1 + g (x) x
        {3, 3, 1, one}, {3, 0, 3, one},  // Delta(gx) = gx (x) g + 1 (x) gx
    };
    std::vector<Scalar> unit = {one, Scalar::zero(f), Scalar::zero(f), Scalar::zero(f)};
    std::vector<Scalar> counit = {one, one, Scalar::zero(f), Scalar::zero(f)};
    Matrix S(f, 4, 4);
    S.at(0, 0) = one;   // S(1) = 1
    S.at(1, 1) = one;   // S(g) = g
    S.at(3, 2) = minus; // S(x) = -gx
    S.at(2, 3) = one;   // S(gx) = x
    const std::vector<std::string> names = {"1", "g", "x", "gx"};
    Algebra alg{f, 4, SparseTensor3::from_entries(4, 4, 4, std::move(mult)), unit, names};
    Coalgebra coa{f, 4, SparseTensor3::from_entries(4, 4, 4, std::move(comult)), counit, names};
    HopfAlgebra h{Bialgebra{std::move(alg), std::move(coa)}, std::move(S)};
    validate(Object(h), "sweedler");
    return h;
}

HopfAlgebra taft(int n, std::uint64_t q, const FieldSpec& f) {
    if (f.is_rational()) throw Error("taft: needs a prime field (use --field p:<p>)");
    if (n < 2) throw Error("taft: n must be at least 2");
    const Scalar qs = Scalar::residue(f, q);
    // q must be a primitive n-th root of unity.
    Scalar p = Scalar::one(f);
    for (int k = 1; k < n; ++k) {
        p *= qs;
        if (p.is_one()) throw Error("taft: q has order " + std::to_string(k) + " < n");
    }
    p *= qs;
    if (!p.is_one()) throw Error("taft: q^n differs from 1, not an n-th root of unity");

    const int d = n * n;
    auto idx = [n](int i, int j) { return i * n + j; };  // g^i x^j
    auto qpow = [&](long e) {
        Scalar r = Scalar::one(f);
        long m = ((e % n) + n) % n;
        for (long t = 0; t < m; ++t) r *= qs;
        return r;
    };
    Entries mult;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    if (j + l >= n) continue;  // x^n = 0
                    // (g^i x^j)(g^k x^l) = q^{jk} g^{i+k} x^{j+l}, from xg = q gx
                    mult.push_back({idx(i, j), idx(k, l), idx((i + k) % n, j + l),
                                    qpow(static_cast<long>(j) * k)});
                }
    // Gaussian binomials for Delta(x^j) = sum_t [j,t]_q g^t x^{j-t} (x) x^t.
    std::vector<std::vector<Scalar>> qb(n, std::vector<Scalar>(n, Scalar::zero(f)));
    qb[0][0] = Scalar::one(f);
    for (int j = 1; j < n; ++j) {
        qb[j][0] = Scalar::one(f);
        for (int t = 1; t <= j; ++t) {
            Scalar upper = (t <= j - 1) ? qb[j - 1][t] : Scalar::zero(f);
            qb[j][t] = qb[j - 1][t - 1] + qpow(t) * upper;
        }
    }
    Entries comult;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int t = 0; t <= j; ++t)
                comult.push_back({idx(i, j), idx((i + t) % n, j - t), idx(i, t), qb[j][t]});
    std::vector<Scalar> unit(d, Scalar::zero(f));
    unit[idx(0, 0)] = Scalar::one(f);
    std::vector<Scalar> counit(d, Scalar::zero(f));
    for (int i = 0; i < n; ++i) counit[idx(i, 0)] = Scalar::one(f);

    std::vector<std::string> names(d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::string s;
            if (i) s += i == 1 ? "g" : "g" + std::to_string(i);
            if (j) s += j == 1 ? "x" : "x" + std::to_string(j);
            if (s.empty()) s = "1";
            names[idx(i, j)] = s;
        }

    Algebra alg{f, d, SparseTensor3::from_entries(d, d, d, std::move(mult)), unit, names};
    Coalgebra coa{f, d, SparseTensor3::from_entries(d, d, d, std::move(comult)), counit, names};
    Bialgebra b{std::move(alg), std::move(coa)};
    auto S = antipode_solve(b);
    if (!S) throw Error("taft: antipode solve failed (invalid parameters?)");
    HopfAlgebra h{std::move(b), std::move(*S)};
    validate(Object(h), "taft");
    return h;
}

Algebra matrix_algebra(const FieldSpec& f, int n) {
    const int d = n * n;
    auto idx = [n](int i, int j) { return i * n + j; };
    Entries mult;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                mult.push_back({idx(i, j), idx(j, k), idx(i, k), Scalar::one(f)});
    std::vector<Scalar> unit(d, Scalar::zero(f));
    for (int i = 0; i < n; ++i) unit[idx(i, i)] = Scalar::one(f);
    std::vector<std::string> names(d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            names[idx(i, j)] = "E" + std::to_string(i + 1) + std::to_string(j + 1);
    Algebra a{f, d, SparseTensor3::from_entries(d, d, d, std::move(mult)), unit, names};
    validate(Object(a), "matrix_algebra");
    return a;
}

Coalgebra matrix_coalgebra(const FieldSpec& f, int n) {
    const int d = n * n;
    auto idx = [n](int i, int j) { return i * n + j; };
    Entries comult;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l)
                comult.push_back({idx(i, j), idx(i, l), idx(l, j), Scalar::one(f)});
    std::vector<Scalar> counit(d, Scalar::zero(f));
    for (int i = 0; i < n; ++i) counit[idx(i, i)] = Scalar::one(f);
    std::vector<std::string> names(d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            names[idx(i, j)] = "e" + std::to_string(i + 1) + std::to_string(j + 1);
    Coalgebra c{f, d, SparseTensor3::from_entries(d, d, d, std::move(comult)), counit, names};
    validate(Object(c), "matrix_coalgebra");
    return c;
}

Bialgebra monoid_bialgebra(const FieldSpec& f, const std::vector<std::vector<int>>& table,
                           std::vector<std::string> names) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw Error("monoid_bialgebra: empty table");
    Entries mult, comult;
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table[i].size()) != n) throw Error("monoid_bialgebra: ragged table");
        if (table[0][i] != i || table[i][0] != i)
            throw Error("monoid_bialgebra: element 0 is not an identity");
        for (int j = 0; j < n; ++j) {
            if (table[i][j] < 0 || table[i][j] >= n)
                throw Error("monoid_bialgebra: bad table entry");
            mult.push_back({i, j, table[i][j], Scalar::one(f)});
        }
        comult.push_back({i, i, i, Scalar::one(f)});
    }
    std::vector<Scalar> unit(n, Scalar::zero(f));
    unit[0] = Scalar::one(f);
    std::vector<Scalar> counit(n, Scalar::one(f));
    Algebra alg{f, n, SparseTensor3::from_entries(n, n, n, std::move(mult)), unit, names};
    Coalgebra coa{f, n, SparseTensor3::from_entries(n, n, n, std::move(comult)), counit, names};
    Bialgebra b{std::move(alg), std::move(coa)};
    validate(Object(b), "monoid_bialgebra");
    return b;
}

Bialgebra idempotent_monoid_bialgebra(const FieldSpec& f) {
    return monoid_bialgebra(f, {{0, 1}, {1, 1}}, {"1", "z"});
}

Coalgebra grouplike_coalgebra(const FieldSpec& f, int m) {
    if (m < 1) throw Error("grouplike_coalgebra: need at least one grouplike");
    Entries comult;
    std::vector<std::string> names(m);
    for (int i = 0; i < m; ++i) {
        comult.push_back({i, i, i, Scalar::one(f)});
        names[i] = std::string(1, static_cast<char>('g' + i));
    }
    std::vector<Scalar> counit(m, Scalar::one(f));
    Coalgebra c{f, m, SparseTensor3::from_entries(m, m, m, std::move(comult)), counit, names};
    validate(Object(c), "grouplike_coalgebra");
    return c;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw Error("make_example: bad " + what + " parameter '" + s + "'");
    }
}

}  // namespace

Object make_example(const std::string& spec, const FieldSpec& f) {
    const auto parts = split(spec, ':');
    const std::string& name = parts[0];
    const auto arity = parts.size() - 1;
    if (name == "dual") {
        if (arity < 1) throw Error("make_example: dual:<spec> needs an inner spec");
        std::string inner = spec.substr(5);
        Object o = make_example(inner, f);
        switch (o.level()) {
            case Level::algebra: return Object(dual(*o.algebra_part()));
            case Level::coalgebra: return Object(dual(*o.coalgebra_part()));
            case Level::bialgebra: return Object(dual(*o.bialgebra_part()));
            default: return Object(dual(*o.hopf_part()));
        }
    }
    if (name == "sweedler" && arity == 0) return Object(sweedler(f));
    if (name == "cyclic" && arity == 1)
        return Object(cyclic_group_algebra(f, parse_int(parts[1], "order")));
    if (name == "s3" && arity == 0) return Object(symmetric3_group_algebra(f));
    if (name == "taft" && arity == 2)
        return Object(taft(parse_int(parts[1], "n"),
                           static_cast<std::uint64_t>(parse_int(parts[2], "q")), f));
    if (name == "matrix-algebra" && arity == 1)
        return Object(matrix_algebra(f, parse_int(parts[1], "size")));
    if (name == "matrix-coalgebra" && arity == 1)
        return Object(matrix_coalgebra(f, parse_int(parts[1], "size")));
    if (name == "idempotent-monoid" && arity == 0)
        return Object(idempotent_monoid_bialgebra(f));
    if (name == "grouplikes" && arity == 1)
        return Object(grouplike_coalgebra(f, parse_int(parts[1], "count")));
    throw Error("make_example: unsupported spec '" + spec + "'");
}

std::vector<std::string> example_names() {
    return {"sweedler",          "cyclic:<n>",        "s3",
            "taft:<n>:<q>",      "matrix-algebra:<n>", "matrix-coalgebra:<n>",
            "idempotent-monoid", "grouplikes:<m>",    "dual:<spec>"};
}

}  // namespace hopf::examples
