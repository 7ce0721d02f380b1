#include "jetscheme/linalg/smith.hpp"

namespace jetscheme {

template SnfResult<ModP> smith_normal_form(const JetMatrix<ModP>&);
template SnfResult<Rational> smith_normal_form(const JetMatrix<Rational>&);
template bool minors_vanish(const JetMatrix<ModP>&, std::size_t);
template bool minors_vanish(const JetMatrix<Rational>&, std::size_t);
template Partition type_by_minor_orders(const JetMatrix<ModP>&);
template Partition type_by_minor_orders(const JetMatrix<Rational>&);
template BaseMatrix<ModP> linearize(const JetMatrix<ModP>&);
template BaseMatrix<Rational> linearize(const JetMatrix<Rational>&);

}  // namespace jetscheme
