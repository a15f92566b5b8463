#include "manp/json_io.hpp"

#include <string>

namespace manp {

namespace {

nlohmann::json element_to_json(const Gf2&, Gf2::Element x) { return static_cast<int>(x); }
nlohmann::json element_to_json(const PrimeField&, PrimeField::Element x) { return x; }
nlohmann::json element_to_json(const Rationals&, const mpq_class& x) {
  if (x.get_den() == 1 && x.get_num().fits_slong_p()) return x.get_num().get_si();
  return x.get_str();
}

mpz_class parse_integer(const std::string& text) {
  mpz_class z;
  if (text.empty() || z.set_str(text, 10) != 0) throw InvalidArgument("bad integer entry '" + text + "'");
  return z;
}

template <class F>
typename F::Element element_from_json(const F& field, const nlohmann::json& v) {
  if constexpr (std::is_same_v<F, Rationals>) {
    if (v.is_number_integer()) return mpq_class(mpz_class(std::to_string(v.get<std::int64_t>())));
    if (v.is_number_unsigned()) return mpq_class(mpz_class(std::to_string(v.get<std::uint64_t>())));
    if (v.is_string()) return field.parse(v.get<std::string>());
  } else {
    mpz_class z;
    if (v.is_number_unsigned())
      z = mpz_class(std::to_string(v.get<std::uint64_t>()));
    else if (v.is_number_integer())
      z = mpz_class(std::to_string(v.get<std::int64_t>()));
    else if (v.is_string())
      z = parse_integer(v.get<std::string>());
    else
      throw InvalidArgument("matrix entries must be integers, got " + v.dump());
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(field.order()));
    return field.from_integer(r.get_si());
  }
  throw InvalidArgument("matrix entries must be integers or \"p/q\" strings, got " + v.dump());
}

}  // namespace

nlohmann::json matrix_to_json(const ExactMatrix& m) {
  return std::visit(
      [](const auto& x) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t r = 0; r < x.rows(); ++r) {
          nlohmann::json row = nlohmann::json::array();
          for (std::size_t c = 0; c < x.cols(); ++c) row.push_back(element_to_json(x.field(), x.at(r, c)));
          rows.push_back(std::move(row));
        }
        return nlohmann::json{{"field", x.field().spec().to_string()}, {"rows", std::move(rows)}};
      },
      m);
}

ExactMatrix matrix_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("field") || !doc.contains("rows"))
    throw InvalidArgument("matrix document needs \"field\" and \"rows\"");
  if (!doc["field"].is_string()) throw InvalidArgument("\"field\" must be a string");
  const FieldSpec spec = FieldSpec::parse(doc["field"].get<std::string>());
  const auto& rows = doc["rows"];
  if (!rows.is_array()) throw InvalidArgument("\"rows\" must be an array");
  const std::size_t nrows = rows.size();
  const std::size_t ncols = nrows == 0 ? 0 : (rows[0].is_array() ? rows[0].size() : 0);
  return with_field(spec, [&](auto field) -> ExactMatrix {
    Matrix<decltype(field)> m(field, nrows, ncols);
    for (std::size_t r = 0; r < nrows; ++r) {
      if (!rows[r].is_array() || rows[r].size() != ncols) throw InvalidArgument("matrix rows have different lengths");
      for (std::size_t c = 0; c < ncols; ++c) m.set(r, c, element_from_json(field, rows[r][c]));
    }
    return m;
  });
}

}  // namespace manp
