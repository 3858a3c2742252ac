#include "cliffwb/mass_term.hpp"

#include <sstream>
#include <vector>

#include "cliffwb/convention.hpp"

namespace cliffwb {

Convention convention_from_name(std::string_view name) {
  if (name == kLedgerConvention.name) return kLedgerConvention;
  if (name == kPrintedConvention.name) return kPrintedConvention;
  throw ConfigError("unknown sign convention '" + std::string(name) + "' (expected ledger|printed)");
}

MassTerm MassTerm::right_scalar(double lambda) {
  MassTerm m;
  if (lambda != 0.0) m.value_ = lambda;
  return m;
}

MassTerm MassTerm::right_clifford(const Multivector& lambda) {
  if (lambda.is_scalar()) return right_scalar(lambda.scalar_part());
  MassTerm m;
  m.value_ = lambda;
  return m;
}

double MassTerm::scalar_value() const {
  if (kind() == Kind::zero) return 0.0;
  if (kind() != Kind::right_scalar) throw DomainError("mass term is not scalar");
  return std::get<double>(value_);
}

const Multivector& MassTerm::clifford_value() const {
  if (kind() != Kind::right_clifford) throw DomainError("mass term is not Clifford-valued");
  return std::get<Multivector>(value_);
}

Multivector MassTerm::as_multivector(int n) const {
  switch (kind()) {
    case Kind::zero:
      return Multivector(n);
    case Kind::right_scalar:
      return Multivector::scalar(n, std::get<double>(value_));
    case Kind::right_clifford: {
      const auto& l = std::get<Multivector>(value_);
      l.require_same(Multivector(n));
      return l;
    }
  }
  return Multivector(n);
}

MassTerm MassTerm::squared() const {
  switch (kind()) {
    case Kind::zero:
      return {};
    case Kind::right_scalar:
      return right_scalar(scalar_value() * scalar_value());
    case Kind::right_clifford:
      return right_clifford(clifford_value() * clifford_value());
  }
  return {};
}

std::string MassTerm::describe() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind()) {
    case Kind::zero:
      return "0";
    case Kind::right_scalar:
      os << std::get<double>(value_);
      return os.str();
    case Kind::right_clifford: {
      const auto& l = std::get<Multivector>(value_);
      bool first = true;
      for (double c : l.coefficients()) {
        os << (first ? "" : ",") << c;
        first = false;
      }
      return os.str();
    }
  }
  return "0";
}

MassTerm parse_mass_term(const std::string& text, int n) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("cannot parse mass coefficient '" + item + "'");
    }
  }
  if (values.empty()) throw ConfigError("empty mass term");
  if (values.size() == 1) return MassTerm::right_scalar(values[0]);
  const std::size_t blades = std::size_t{1} << n;
  if (values.size() != blades)
    throw ConfigError("Clifford mass needs " + std::to_string(blades) + " coefficients for n=" +
                      std::to_string(n) + ", got " + std::to_string(values.size()));
  return MassTerm::right_clifford(Multivector(n, std::span<const double>(values)));
}

}  // namespace cliffwb
