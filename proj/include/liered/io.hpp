#ifndef LIERED_IO_HPP
#define LIERED_IO_HPP

#include <string>

#include "liered/asimple.hpp"
#include "liered/catalog.hpp"

namespace liered {
namespace io {

/// Structure-constants file grammar (line-oriented, UTF-8, '#' comments):
///   dim <N>
///   basis <name_1> ... <name_N>
///   bracket <a> <b> = <coeff> <name> [+ <coeff> <name>]...   (index a < index b)
///   grading <k>: <names...>
/// Unlisted brackets are zero. Jacobi and declared gradings are validated.
LieAlgebra read_algebra(const std::string& text);
std::string write_algebra(const LieAlgebra& g);

/// Companion certificate section: a `certificate` line followed by
/// `witness <X_name> <Y_name>` lines. Serializable certificates are exactly
/// those whose witnesses are named basis vectors; a is the greedy maximal
/// abelian ideal.
ASimpleCertificate read_certificate(const std::string& text, const LieAlgebra& g);
std::string write_certificate(const LieAlgebra& g, const ASimpleCertificate& cert);

/// Semidirect input: the h algebra in the grammar above plus one
///   action <h_name> = r11 r12 ... ; r21 r22 ... ; ...
/// line per h basis vector (square matrices of equal size).
catalog::SemidirectSpec read_semidirect(const std::string& text);

}  // namespace io
}  // namespace liered

#endif
