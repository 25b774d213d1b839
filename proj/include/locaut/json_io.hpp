#ifndef LOCAUT_JSON_IO_HPP
#define LOCAUT_JSON_IO_HPP

#include "locaut/counterexample.hpp"
#include "locaut/localcheck.hpp"

#include <json.hpp>

namespace locaut {

// Stable key order keeps reports byte-identical across runs.
using Json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j);

Json sl_to_json(const SlElement& x);
/// Accepts {"n", "coords"} or {"n", "matrix"} (trace-zero validated).
SlElement sl_from_json(const Json& j);

Json linmap_to_json(const LinMap& map);
LinMap linmap_from_json(const Json& j);

Json signed_auto_to_json(const SignedAuto& phi);
SignedAuto signed_auto_from_json(const Json& j);

Json refutation_to_json(const Refutation& r);
Json certify_report_to_json(const CertifyReport& report, unsigned seed);

} // namespace locaut

#endif
