#pragma once

#include <string>

#include <json.hpp>

#include "twistkit/tensor.hpp"

namespace twistkit {

inline constexpr int kSchemaVersion = 1;

/// Text form accepted back by the parser: "2*kinv*M[0,1]*P[0]^2 ox P[1] - I*P[2]".
std::string render_text(const Element& e);
std::string render_text(const Tensor2& t);
std::string render_text(const Tensor3& t);

std::string render_gauss(const GaussRat& g);
std::string render_params(const ParamMono& m);

/// Structured form: {"rank": R, "terms": [{"coefficient": {"re","im","params"}, ...}]}.
nlohmann::json render_structured(const Element& e);
nlohmann::json render_structured(const Tensor2& t);
nlohmann::json render_structured(const Tensor3& t);

}  // namespace twistkit
