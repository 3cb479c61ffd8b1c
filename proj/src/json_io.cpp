#include "qtf/json_io.hpp"
#include "qtf/errors.hpp"

#include <fstream>

namespace qtf {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& what) {
    throw Error(Errc::SchemaError, (path.empty() ? std::string("/") : path) + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) schema(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) schema(path + "/" + key, "missing field");
    return *it;
}

std::int64_t as_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) schema(path, "expected an integer");
    return j.get<std::int64_t>();
}

} // namespace

Laurent laurent_from_json(const json& j, const std::string& path) {
    std::int64_t dim = as_int(field(j, "dim", path), path + "/dim");
    if (dim < 1) schema(path + "/dim", "dimension must be positive");
    const json& terms = field(j, "terms", path);
    if (!terms.is_array()) schema(path + "/terms", "expected an array");
    Laurent u(static_cast<int>(dim));
    for (std::size_t i = 0; i < terms.size(); ++i) {
        std::string tp = path + "/terms/" + std::to_string(i);
        const json& k = field(terms[i], "k", tp);
        if (!k.is_array() || k.size() != static_cast<std::size_t>(dim)) schema(tp + "/k", "exponent must have dim entries");
        Index idx;
        for (std::size_t c = 0; c < k.size(); ++c) idx.push_back(as_int(k[c], tp + "/k/" + std::to_string(c)));
        const json& v = field(terms[i], "v", tp);
        if (!v.is_string()) {
            if (v.is_number_float()) throw Error(Errc::NonRational, tp + "/v: decimal numbers are not accepted");
            schema(tp + "/v", "coefficient must be a rational string");
        }
        Rational c;
        try {
            c = parse_rational(v.get<std::string>());
        } catch (const Error& e) {
            throw Error(Errc::NonRational, tp + "/v: " + e.what());
        }
        u.add_term(idx, c);
    }
    return u;
}

json to_json(const Laurent& u) {
    json terms = json::array();
    for (auto& [k, c] : u.terms()) terms.push_back({{"k", k}, {"v", to_string(c)}});
    return {{"dim", u.dim()}, {"terms", terms}};
}

IntMatrix int_matrix_from_json(const json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) schema(path, "expected a non-empty array of rows");
    std::vector<std::vector<std::int64_t>> rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string rp = path + "/" + std::to_string(i);
        if (!j[i].is_array() || j[i].size() != j.size()) schema(rp, "matrix must be square");
        std::vector<std::int64_t> r;
        for (std::size_t c = 0; c < j[i].size(); ++c) r.push_back(as_int(j[i][c], rp + "/" + std::to_string(c)));
        rows.push_back(std::move(r));
    }
    return IntMatrix::from_rows(rows);
}

json to_json(const IntMatrix& m) { return m.rows(); }

QtfBank bank_from_json(const json& j) {
    IntMatrix m = int_matrix_from_json(field(j, "dilation", ""), "/dilation");
    DilationContext ctx = make_context(m);
    Laurent a = laurent_from_json(field(j, "lowpass", ""), "/lowpass");
    if (a.dim() != ctx.dim()) throw Error(Errc::DimMismatch, "/lowpass: dimension differs from dilation");
    QtfBank bank{ctx, a, {}, {}};
    if (auto it = j.find("highpass"); it != j.end()) {
        if (!it->is_array()) schema("/highpass", "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            std::string hp = "/highpass/" + std::to_string(i);
            const json& h = (*it)[i];
            const json& s = field(h, "scale_sq", hp);
            if (!s.is_string()) schema(hp + "/scale_sq", "expected a rational string");
            Rational sq;
            try {
                sq = parse_rational(s.get<std::string>());
            } catch (const Error& e) {
                throw Error(Errc::NonRational, hp + "/scale_sq: " + e.what());
            }
            if (sq < 0) schema(hp + "/scale_sq", "must be non-negative");
            Laurent base = laurent_from_json(field(h, "base", hp), hp + "/base");
            if (base.dim() != ctx.dim()) throw Error(Errc::DimMismatch, hp + "/base: dimension differs from dilation");
            std::int64_t sg = as_int(field(h, "sign", hp), hp + "/sign");
            if (sg != 1 && sg != -1) schema(hp + "/sign", "must be 1 or -1");
            bank.highpass.push_back({ScaledFilter(sq, base), static_cast<int>(sg)});
        }
    }
    if (auto it = j.find("meta"); it != j.end()) {
        if (!it->is_object()) schema("/meta", "expected an object");
        bank.meta.name = it->value("name", "");
        bank.meta.source = it->value("source", "");
        if (auto cv = it->find("claimed_vmo"); cv != it->end() && !cv->is_null()) {
            if (!cv->is_array()) schema("/meta/claimed_vmo", "expected an array");
            std::vector<int> v;
            for (std::size_t i = 0; i < cv->size(); ++i)
                v.push_back(static_cast<int>(as_int((*cv)[i], "/meta/claimed_vmo/" + std::to_string(i))));
            bank.meta.claimed_vmo = v;
        }
    }
    return bank;
}

json to_json(const QtfBank& b) {
    json hp = json::array();
    for (auto& h : b.highpass)
        hp.push_back({{"scale_sq", to_string(h.filter.scale_sq())}, {"base", to_json(h.filter.base())}, {"sign", h.sign}});
    json meta = {{"name", b.meta.name}, {"source", b.meta.source}};
    meta["claimed_vmo"] = b.meta.claimed_vmo ? json(*b.meta.claimed_vmo) : json(nullptr);
    return {{"dilation", to_json(b.ctx.matrix())}, {"lowpass", to_json(b.lowpass)}, {"highpass", hp}, {"meta", meta}};
}

LaurentMatrix laurent_matrix_from_json(const json& j, const std::string& path) {
    const json& e = field(j, "entries", path);
    if (!e.is_array() || e.empty()) schema(path + "/entries", "expected a non-empty array of rows");
    std::size_t rows = e.size();
    std::size_t cols = e[0].is_array() ? e[0].size() : 0;
    if (cols == 0) schema(path + "/entries/0", "expected a non-empty row");
    int dim = -1;
    LaurentMatrix m;
    for (std::size_t i = 0; i < rows; ++i) {
        std::string rp = path + "/entries/" + std::to_string(i);
        if (!e[i].is_array() || e[i].size() != cols) schema(rp, "rows must have equal length");
        for (std::size_t c = 0; c < cols; ++c) {
            Laurent u = laurent_from_json(e[i][c], rp + "/" + std::to_string(c));
            if (dim < 0) {
                dim = u.dim();
                m = LaurentMatrix(rows, cols, dim);
            } else if (u.dim() != dim) {
                throw Error(Errc::DimMismatch, rp + "/" + std::to_string(c) + ": dimension differs");
            }
            m(i, c) = u;
        }
    }
    return m;
}

json to_json(const LaurentMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) r.push_back(to_json(m(i, c)));
        rows.push_back(r);
    }
    return {{"entries", rows}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::InvalidArgument, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(Errc::SchemaError, path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::InvalidArgument, "cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace qtf
