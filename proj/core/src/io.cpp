#include "leibniz/io.hpp"

#include <fstream>

namespace leibniz::io {

namespace {

FieldSpec parse_field(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "Q") return FieldSpec::rationals();
        throw ParseError("unknown field '" + j.get<std::string>() + "' (use \"Q\" or {\"p\": prime})");
    }
    if (j.is_object() && j.contains("p") && j["p"].is_number_integer() && j["p"].get<long long>() > 0 &&
        j["p"].get<long long>() < (1ll << 31))
        return FieldSpec::prime_field(j["p"].get<std::uint32_t>());
    throw ParseError("field must be \"Q\" or {\"p\": prime}");
}

json serialize_field(const FieldSpec& f) {
    if (f.is_rational()) return "Q";
    return json{{"p", f.prime()}};
}

Scalar parse_scalar(const FieldSpec& f, const json& j) {
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    if (j.is_number_integer()) return Scalar::of(f, j.get<long long>());
    throw ParseError("scalar must be a string or an integer");
}

json serialize_scalar(const Scalar& s) {
    if (s.field().is_prime_field()) return s.residue_value();
    return s.to_string();
}

}  // namespace

LeibnizAlgebra parse_algebra(const json& doc) {
    if (!doc.is_object()) throw ParseError("algebra document must be an object");
    if (!doc.contains("field") || !doc.contains("dim"))
        throw ParseError("algebra document needs 'field' and 'dim'");
    const FieldSpec f = parse_field(doc["field"]);
    if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 0)
        throw ParseError("'dim' must be a non-negative integer");
    const std::size_t dim = doc["dim"].get<std::size_t>();
    std::vector<std::vector<Vec>> c(dim, std::vector<Vec>(dim, vec_zero(f, dim)));
    if (doc.contains("products")) {
        if (!doc["products"].is_array()) throw ParseError("'products' must be an array");
        for (const auto& entry : doc["products"]) {
            if (!entry.is_array() || entry.size() != 3)
                throw ParseError("each product entry must be [i, j, coefficients]");
            const std::size_t i = entry[0].get<std::size_t>();
            const std::size_t j = entry[1].get<std::size_t>();
            if (i < 1 || i > dim || j < 1 || j > dim)
                throw ParseError("product indices out of range (1-based)");
            const auto& coeffs = entry[2];
            if (!coeffs.is_array() || coeffs.size() != dim)
                throw ParseError("product coefficients must list dim scalars");
            for (std::size_t k = 0; k < dim; ++k) c[i - 1][j - 1][k] = parse_scalar(f, coeffs[k]);
        }
    }
    return LeibnizAlgebra::unchecked(f, dim, std::move(c));
}

json serialize_algebra(const LeibnizAlgebra& a) {
    json doc;
    doc["field"] = serialize_field(a.field());
    doc["dim"] = a.dim();
    json products = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const Vec& c = a.basis_product(i, j);
            if (vec_is_zero(c)) continue;
            json coeffs = json::array();
            for (const auto& s : c) coeffs.push_back(serialize_scalar(s));
            products.push_back(json::array({i + 1, j + 1, coeffs}));
        }
    }
    doc["products"] = std::move(products);
    return doc;
}

Bimodule parse_bimodule(const json& doc, std::shared_ptr<const LeibnizAlgebra> algebra) {
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("lambda") || !doc.contains("rho"))
        throw ParseError("bimodule document needs 'dim', 'lambda' and 'rho'");
    const FieldSpec f = algebra->field();
    const std::size_t dim_m = doc["dim"].get<std::size_t>();
    auto parse_family = [&](const json& arr) {
        if (!arr.is_array() || arr.size() != algebra->dim())
            throw ParseError("action family must list one matrix per algebra basis element");
        std::vector<ExactMatrix> out;
        for (const auto& mat : arr) {
            if (!mat.is_array() || mat.size() != dim_m)
                throw ParseError("action matrix must have dim rows");
            std::vector<Vec> rows;
            for (const auto& row : mat) {
                if (!row.is_array() || row.size() != dim_m)
                    throw ParseError("action matrix must be square of the bimodule dimension");
                Vec r = vec_zero(f, dim_m);
                for (std::size_t j = 0; j < dim_m; ++j) r[j] = parse_scalar(f, row[j]);
                rows.push_back(std::move(r));
            }
            out.push_back(ExactMatrix::from_dense(f, rows));
        }
        return out;
    };
    auto lambda = parse_family(doc["lambda"]);
    auto rho = parse_family(doc["rho"]);
    return Bimodule::unchecked(std::move(algebra), dim_m, std::move(lambda), std::move(rho));
}

json serialize_bimodule(const Bimodule& m) {
    json doc;
    doc["dim"] = m.dim();
    auto serialize_family = [&](auto&& get) {
        json arr = json::array();
        for (std::size_t i = 0; i < m.algebra().dim(); ++i) {
            json mat = json::array();
            for (const auto& row : get(i).to_dense()) {
                json r = json::array();
                for (const auto& s : row) r.push_back(serialize_scalar(s));
                mat.push_back(std::move(r));
            }
            arr.push_back(std::move(mat));
        }
        return arr;
    };
    doc["lambda"] = serialize_family([&](std::size_t i) -> const ExactMatrix& { return m.lambda(i); });
    doc["rho"] = serialize_family([&](std::size_t i) -> const ExactMatrix& { return m.rho(i); });
    return doc;
}

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ParseError("cannot parse '" + path + "': " + e.what());
    }
    return doc;
}

}  // namespace

LeibnizAlgebra load_algebra_file(const std::string& path) { return parse_algebra(load_json(path)); }

Bimodule load_bimodule_file(const std::string& path, std::shared_ptr<const LeibnizAlgebra> algebra) {
    return parse_bimodule(load_json(path), std::move(algebra));
}

std::vector<std::string> builtin_algebra_names() { return {"one-dim", "A-alg", "N", "D", "B"}; }

LeibnizAlgebra builtin_algebra(const std::string& name, const FieldSpec& f) {
    if (name == "one-dim" || name == "A-alg") return fixtures::one_dim_lie(f);
    if (name == "N") return fixtures::two_dim_nilpotent(f);
    if (name == "D") return fixtures::two_dim_supersolvable(f);
    if (name == "B") return fixtures::abelian(f, 2);
    throw ParseError("unknown built-in algebra '" + name + "'");
}

Bimodule builtin_coefficients(const std::string& name, std::shared_ptr<const LeibnizAlgebra> a) {
    if (name == "trivial") return trivial_bimodule(std::move(a), 1);
    if (name == "adjoint") return adjoint_bimodule(std::move(a));
    if (name == "A-mod") {
        if (a->dim() != 1) throw ParseError("'A-mod' lives over the one-dimensional Lie algebra");
        return fixtures::shift_corner_bimodule(a->field());
    }
    if (name == "B") {
        auto [alg, action] = fixtures::upper_identity_pair(a->field());
        if (!(alg == *a)) throw ParseError("'B' coefficients live over the built-in algebra B");
        return symmetrized(std::move(a), action);
    }
    throw ParseError("unknown coefficient choice '" + name + "'");
}

json report_record(const std::string& anchor, const std::string& check, const json& expected,
                   const json& computed, bool pass) {
    return json{{"paper_anchor", anchor},
                {"check", check},
                {"expected", expected},
                {"computed", computed},
                {"pass", pass}};
}

}  // namespace leibniz::io
