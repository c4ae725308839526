#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "spin7/clifford.hpp"
#include "spin7/flow.hpp"
#include "spin7/metric.hpp"
#include "spin7/polyform.hpp"
#include "spin7/spin7_forms.hpp"
#include "spin7/spinor_square.hpp"

namespace spin7 {

// Raised for malformed input; the message names the offending field.
class JsonError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All emitters print reals with 17 significant digits, enough to
// round-trip an IEEE double exactly.
std::string format_real(double x);

// Multivector document: {"dim": 8, "coeffs": {"1,3": -2.0, ...}}.
// Keys are comma-separated increasing indices; the scalar key is "".
// Zero coefficients are omitted on output and optional on input.
std::string to_json(const Polyform& a);
Polyform polyform_from_json(const std::string& text);

// Metric document: 8x8 row-major array of arrays.  The parser also
// accepts a flat array of 64 reals and the literal string "identity".
std::string to_json(const Metric8& h);
Metric8 metric_from_json(const std::string& text);

// Spinor document: flat array of 16 reals.
std::string spinor_to_json(const Spinor16& xi);
Spinor16 spinor_from_json(const std::string& text);

std::string to_json(const Spin7Verdict& v);
std::string to_json(const SquareReport& r);

std::string to_json(const FlowConfig& c);
FlowConfig flow_config_from_json(const std::string& text);
std::string to_json(const FlowReport& r);

const char* to_string(FlowClass c);

// {"eigenvalues": [...]} with an operator label, used by the spectrum
// and potential commands.
std::string eigenvalue_json(const std::string& operator_name, const std::vector<double>& values);

}  // namespace spin7
