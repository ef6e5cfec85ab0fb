#pragma once

#include "geninv/exact_matrix.hpp"
#include "geninv/finite_ring.hpp"
#include "geninv/verifier.hpp"

#include <json.hpp>

#include <string>

namespace geninv {

using Json = nlohmann::ordered_json;

struct MatrixParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Matrix JSON: {"rows": n, "cols": n, "entries": [[re_num, re_den, im_num,
// im_den], ...]} row-major. Integer components are plain JSON numbers while
// they fit in 64 bits, decimal strings beyond that.
// ---------------------------------------------------------------------------

namespace detail {

inline Json int_to_json(const Int& v) {
    if (fits_int64(v)) return Json(static_cast<std::int64_t>(v));
    return Json(to_decimal_string(v));
}

inline Int int_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s.empty()) throw MatrixParseError(where + ": empty integer string");
        std::size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (k == s.size()) throw MatrixParseError(where + ": malformed integer string");
        for (; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9')
                throw MatrixParseError(where + ": malformed integer string '" + s + "'");
        return int_from_decimal_string(s);
    }
    throw MatrixParseError(where + ": expected integer or decimal string");
}

} // namespace detail

inline Json matrix_to_json(const ExactMatrix& m) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const GaussianRational& z = m(i, j);
            entries.push_back(Json::array({detail::int_to_json(numerator(z.re)),
                                           detail::int_to_json(denominator(z.re)),
                                           detail::int_to_json(numerator(z.im)),
                                           detail::int_to_json(denominator(z.im))}));
        }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

inline ExactMatrix matrix_from_json(const Json& j) {
    if (!j.is_object()) throw MatrixParseError("matrix: expected a JSON object");
    for (const char* key : {"rows", "cols", "entries"})
        if (!j.contains(key)) throw MatrixParseError(std::string("matrix: missing '") + key + "'");
    if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned())
        throw MatrixParseError("matrix: rows/cols must be nonnegative integers");
    const std::size_t rows = j["rows"].get<std::size_t>();
    const std::size_t cols = j["cols"].get<std::size_t>();
    const Json& entries = j["entries"];
    if (!entries.is_array() || entries.size() != rows * cols)
        throw MatrixParseError("matrix: entries must be an array of rows*cols quadruples");
    ExactMatrix m(rows, cols);
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const Json& e = entries[k];
        const std::string where = "entry " + std::to_string(k);
        if (!e.is_array() || e.size() != 4)
            throw MatrixParseError(where + ": expected [re_num, re_den, im_num, im_den]");
        Int re_num = detail::int_from_json(e[0], where);
        Int re_den = detail::int_from_json(e[1], where);
        Int im_num = detail::int_from_json(e[2], where);
        Int im_den = detail::int_from_json(e[3], where);
        if (re_den == 0 || im_den == 0)
            throw MatrixParseError(where + ": zero denominator");
        m(k / cols, k % cols) =
            GaussianRational(make_rational(re_num, re_den), make_rational(im_num, im_den));
    }
    return m;
}

// ---------------------------------------------------------------------------
// Census report JSON.
// ---------------------------------------------------------------------------

inline Json census_to_json(const CensusReport& rep) {
    auto cls = [](const std::vector<std::uint64_t>& v) {
        return Json{{"count", v.size()}, {"elements", v}};
    };
    return Json{
        {"schema", "geninv.census/1"},
        {"ring", rep.ring},
        {"order", rep.order},
        {"classes",
         Json{{"regular", cls(rep.regular)},
              {"group", cls(rep.group)},
              {"mp", cls(rep.mp)},
              {"core", cls(rep.core)},
              {"dual_core", cls(rep.dual_core)}}},
        {"separating",
         Json{{"core_not_mp", rep.core_not_mp},
              {"dual_core_not_mp", rep.dual_core_not_mp},
              {"group_not_mp", rep.group_not_mp},
              {"mp_not_group", rep.mp_not_group},
              {"regular_not_group", rep.regular_not_group}}},
        {"inclusions_hold", rep.inclusions_hold},
    };
}

// ---------------------------------------------------------------------------
// Certificate JSON, self-contained: operand values are embedded so a third
// party can re-verify from the document alone.
// ---------------------------------------------------------------------------

inline Json element_to_json(const ExactMatrix& m) { return matrix_to_json(m); }

inline Json element_to_json(const FiniteRingElement& e) {
    Json out{{"ring", e.ring().descriptor()}, {"index", e.index()}};
    if (e.ring().kind() == FiniteRingKind::MatZmodP) {
        const auto d = e.ring().decode(e.index());
        const std::uint32_t k = e.ring().dim();
        Json rows = Json::array();
        for (std::uint32_t i = 0; i < k; ++i) {
            Json row = Json::array();
            for (std::uint32_t j = 0; j < k; ++j) row.push_back(d[i * k + j]);
            rows.push_back(std::move(row));
        }
        out["entries"] = std::move(rows);
    }
    return out;
}

inline const char* ep_status_name(EpStatus s) {
    switch (s) {
        case EpStatus::Ep: return "EP";
        case EpStatus::NotEp: return "not_EP";
        case EpStatus::PrerequisiteMissing: return "prerequisite_missing";
    }
    return "?";
}

inline Json ep_to_json(const EpVerdict& v) {
    Json conds = Json::array();
    for (const auto& c : v.conditions) conds.push_back(Json{{"name", c.name}, {"holds", c.holds}});
    return Json{{"status", ep_status_name(v.status)},
                {"group_exists", v.group_exists},
                {"mp_exists", v.mp_exists},
                {"consistent", v.consistent},
                {"conditions", std::move(conds)}};
}

template <star_ring_element E>
Json certificate_to_json(const Certificate<E>& cert, const std::string& backend) {
    Json inverses = Json::object();
    auto one = [](const Result<E>& res) {
        if (res) return Json{{"exists", true}, {"value", element_to_json(res.value())}};
        return Json{{"exists", false}, {"reason", res.error().describe()}};
    };
    inverses["group"] = one(cert.bundle.group);
    inverses["mp"] = one(cert.bundle.mp);
    inverses["core"] = one(cert.bundle.core);
    inverses["dual_core"] = one(cert.bundle.dual_core);

    auto idem = [](const std::optional<E>& v) {
        return v ? element_to_json(*v) : Json(nullptr);
    };
    Json equations = Json::object();
    for (const auto& [name, reports] : cert.equations) {
        Json list = Json::array();
        for (const auto& rep : reports) {
            Json item{{"id", rep.id}, {"holds", rep.holds}};
            if (!rep.holds) {
                item["lhs"] = element_to_json(rep.lhs);
                item["rhs"] = element_to_json(rep.rhs);
            }
            list.push_back(std::move(item));
        }
        equations[name] = std::move(list);
    }
    Json crosschecks = Json::array();
    for (const auto& cc : cert.cross_checks)
        crosschecks.push_back(
            Json{{"name", cc.name}, {"applicable", cc.applicable}, {"holds", cc.holds}});

    return Json{
        {"schema", "geninv.certificate/1"},
        {"backend", backend},
        {"element", element_to_json(cert.element)},
        {"inverses", std::move(inverses)},
        {"idempotents",
         Json{{"p", idem(cert.bundle.triple.p)},
              {"q", idem(cert.bundle.triple.q)},
              {"r", idem(cert.bundle.triple.r)}}},
        {"equations", std::move(equations)},
        {"ep", ep_to_json(cert.ep)},
        {"cross_checks", std::move(crosschecks)},
        {"presence_ok", cert.presence_ok},
        {"valid", cert.valid},
    };
}

} // namespace geninv
