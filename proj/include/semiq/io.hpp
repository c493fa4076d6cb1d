#ifndef SEMIQ_IO_HPP
#define SEMIQ_IO_HPP

#include <json.hpp>
#include <string>

#include "semiq/closure.hpp"
#include "semiq/linalg.hpp"
#include "semiq/mortality.hpp"
#include "semiq/psi.hpp"
#include "semiq/rees.hpp"
#include "semiq/structure.hpp"

namespace semiq {

// Insertion-ordered JSON keeps reports byte-identical across runs.
using Json = nlohmann::ordered_json;

enum class Verbosity { summary, certificates, full };
Verbosity parse_verbosity(const std::string& name);

// Matrix literals: array of rows, entries "p/q" or "p" (integer JSON numbers
// are also accepted); a zero denominator is rejected.
Json matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const Json& j);

// {"dim": n, "generators": [matrix, ...]}
Json generators_to_json(const GeneratorSet& gens);
GeneratorSet generators_from_json(const Json& j);

Json subspace_to_json(const Subspace& s);

Json closure_report(const Closure& c, Verbosity verbosity);
Json structure_report(const Closure& c, const StructureReport& s, Verbosity verbosity);
Json psi_frame_report(const psi::Frame& frame, Verbosity verbosity);
Json bound_certificate_report(const psi::BoundCertificate& cert, Verbosity verbosity);
Json mortality_report_json(const MortalityReport& report);

Json theta_to_json(const psi::ThetaCertificate& cert);
psi::ThetaCertificate theta_from_json(const Json& j);

// {"group": multiplication table, "sandwich": [[index or null, ...], ...]}
ReesSemigroup rees_from_json(const Json& j);
Json rees_report(const ReesSemigroup& s);

Json error_report(const Error& err);

}  // namespace semiq

#endif  // SEMIQ_IO_HPP
