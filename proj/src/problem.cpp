#include "fdg/problem.hpp"

#include <sstream>
#include <stdexcept>

namespace fdg {

Problem::Problem(Vector lower, Vector upper, Objective objective)
    : lower_(std::move(lower)), upper_(std::move(upper)), objective_(std::move(objective)) {
  if (lower_.empty()) throw std::invalid_argument("problem dimension must be positive");
  if (lower_.size() != upper_.size())
    throw std::invalid_argument("lower and upper bounds differ in length");
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (!(lower_[i] < upper_[i])) {
      std::ostringstream msg;
      msg << "bound " << i << " is empty: [" << lower_[i] << ", " << upper_[i] << "]";
      throw std::invalid_argument(msg.str());
    }
  }
  if (!objective_) throw std::invalid_argument("problem has no objective");
}

double Problem::evaluate(EvaluationLedger& ledger, std::span<const double> x) const {
  if (x.size() != dimension()) {
    std::ostringstream msg;
    msg << "dimension mismatch: got " << x.size() << " values for a " << dimension()
        << "-dimensional problem";
    throw std::invalid_argument(msg.str());
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] >= lower_[i] && x[i] <= upper_[i])) {
      std::ostringstream msg;
      msg << "component " << i << " = " << x[i] << " outside [" << lower_[i] << ", "
          << upper_[i] << "]";
      throw std::invalid_argument(msg.str());
    }
  }
  const double y = objective_(x);
  ledger.record();
  return y;
}

Vector compose(std::span<const double> base, std::span<const std::size_t> subset,
               std::span<const double> donor) {
  if (donor.size() != subset.size())
    throw std::invalid_argument("donor length differs from subset size");
  Vector out(base.begin(), base.end());
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] >= out.size()) throw std::out_of_range("subset index out of range");
    out[subset[i]] = donor[i];
  }
  return out;
}

void assign_subset(Vector& x, std::span<const std::size_t> subset,
                   std::span<const double> source) {
  for (auto i : subset) x[i] = source[i];
}

Vector gather(std::span<const double> x, std::span<const std::size_t> subset) {
  Vector out;
  out.reserve(subset.size());
  for (auto i : subset) out.push_back(x[i]);
  return out;
}

}  // namespace fdg
