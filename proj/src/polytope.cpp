#include "prequant/polytope.hpp"

#include "prequant/errors.hpp"
#include "prequant/lattice.hpp"
#include "prequant/linear_feasibility.hpp"

#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace prequant {

DelzantPolytope::DelzantPolytope(std::size_t d, std::vector<Facet> facets) : d_(d), facets_(std::move(facets)) {
    if (d_ == 0)
        throw std::invalid_argument("polytope dimension must be positive");
    if (facets_.empty())
        throw std::invalid_argument("polytope needs at least one facet");
    for (std::size_t j = 0; j < facets_.size(); ++j) {
        const auto& f = facets_[j];
        std::string where = "facet " + std::to_string(j + 1);
        if (f.normal.size() != d_)
            throw std::invalid_argument(where + ": conormal has wrong length");
        if (gcd(f.normal) != 1)
            throw std::invalid_argument(where + ": conormal is not primitive");
        if (f.offset <= 0)
            throw std::invalid_argument(where + ": offset must be positive");
    }
}

RatVector DelzantPolytope::offsets() const {
    RatVector a;
    for (const auto& f : facets_)
        a.push_back(f.offset);
    return a;
}

DelzantPolytope parse_polytope(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t d = 0;
    std::vector<Facet> facets;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        for (std::size_t pos = 0; (pos = line.find(';', pos)) != std::string::npos; pos += 3)
            line.replace(pos, 1, " ; ");
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key))
            continue;
        auto fail = [&](const std::string& msg) {
            return std::invalid_argument("line " + std::to_string(lineno) + ": " + msg);
        };
        if (key == "dim") {
            std::string value, extra;
            if (d != 0 || !(ls >> value) || (ls >> extra))
                throw fail("malformed dim line");
            Integer v = parse_integer(value);
            if (v <= 0 || !v.fits_uint_p())
                throw fail("dimension must be a positive integer");
            d = v.get_ui();
        } else if (key == "facet") {
            if (d == 0)
                throw fail("facet before dim");
            std::vector<std::string> tokens;
            std::string tok;
            while (ls >> tok)
                tokens.push_back(tok);
            if (tokens.size() != d + 2 || tokens[d] != ";")
                throw fail("expected 'facet v_1 ... v_" + std::to_string(d) + " ; a'");
            Facet f;
            for (std::size_t i = 0; i < d; ++i)
                f.normal.push_back(parse_integer(tokens[i]));
            f.offset = parse_rational(tokens[d + 1]);
            facets.push_back(std::move(f));
        } else {
            throw fail("unknown keyword '" + key + "'");
        }
    }
    if (d == 0)
        throw std::invalid_argument("missing dim line");
    return DelzantPolytope(d, std::move(facets));
}

DelzantPolytope load_polytope(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_polytope(buf.str());
}

std::string serialize(const DelzantPolytope& polytope) {
    std::string out = "dim " + std::to_string(polytope.dim()) + "\n";
    for (const auto& f : polytope.facets()) {
        out += "facet";
        for (const auto& v : f.normal)
            out += " " + to_string(v);
        out += " ; " + to_string(f.offset) + "\n";
    }
    return out;
}

bool recession_cone_trivial(const DelzantPolytope& polytope) {
    const std::size_t d = polytope.dim();
    // nonzero x in the cone iff some x_i >= 1 or x_i <= -1 is attainable inside it
    for (std::size_t i = 0; i < d; ++i)
        for (int sign : {1, -1}) {
            LinearSystem sys{d, {}};
            for (const auto& f : polytope.facets())
                sys.add_ge(to_rational(f.normal), 0);
            RatVector e(d);
            e[i] = sign;
            sys.add_ge(e, 1);
            if (is_feasible(sys))
                return false;
        }
    return true;
}

bool dual_compactness(const DelzantPolytope& polytope) {
    const std::size_t n = polytope.facet_count(), d = polytope.dim();
    std::vector<IntVector> cols;
    for (const auto& f : polytope.facets())
        cols.push_back(f.normal);
    IntMatrix beta = IntMatrix::from_columns(cols, d);
    // directions killed by every conormal are invisible to the dual test
    if (beta.rank() < d)
        return false;
    LatticeBasis kappa = integer_kernel(beta);
    LinearSystem sys{n, {}};
    for (std::size_t j = 0; j < n; ++j) {
        RatVector e(n);
        e[j] = 1;
        sys.add_ge(e, 0);
    }
    for (const auto& kv : kappa.vectors)
        sys.add_eq(to_rational(kv), 0);
    sys.add_eq(RatVector(n, Rational(1)), 1);
    return !is_feasible(sys);
}

namespace {

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    if (k > n)
        return;
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

ValidationReport validate(const DelzantPolytope& polytope) {
    const std::size_t d = polytope.dim(), n = polytope.facet_count();
    const auto& facets = polytope.facets();

    LinearSystem inside{d, {}};
    for (const auto& f : facets)
        inside.add_ge(to_rational(f.normal), -f.offset);
    if (!is_feasible(inside))
        throw HypothesisError("nonempty", "polytope is empty");

    ValidationReport report;
    report.compact = recession_cone_trivial(polytope);

    std::set<RatVector> seen;
    for_each_subset(n, d, [&](const std::vector<std::size_t>& subset) {
        std::vector<RatVector> A;
        RatVector b;
        for (auto j : subset) {
            A.push_back(to_rational(facets[j].normal));
            b.push_back(-facets[j].offset);
        }
        auto x = solve_square(A, b);
        if (!x || !satisfies(inside, *x) || !seen.insert(*x).second)
            return;
        Vertex v{*x, {}};
        for (std::size_t j = 0; j < n; ++j) {
            Rational s = facets[j].offset;
            for (std::size_t i = 0; i < d; ++i)
                s += Rational(facets[j].normal[i]) * (*x)[i];
            if (s == 0)
                v.active.push_back(j);
        }
        report.vertices.push_back(std::move(v));
    });

    report.smooth = !report.vertices.empty();
    for (const auto& v : report.vertices) {
        if (v.active.size() != d) {
            report.smooth = false;
            break;
        }
        std::vector<IntVector> normals;
        for (auto j : v.active)
            normals.push_back(facets[j].normal);
        if (!extends_to_lattice_basis(normals, d)) {
            report.smooth = false;
            break;
        }
    }
    return report;
}

}  // namespace prequant
