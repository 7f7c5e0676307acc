#pragma once

#include <string>
#include <vector>

namespace qgb {

// The eight embedding variants, in the fixed reporting order.
enum class Method {
  kFixed,
  kMlp,
  kAngleVqc,
  kQuop,
  kQuopTrainable,
  kQwalkVec,
  kQwalkVecTrainable,
  kQpe,
};

const std::vector<Method>& all_methods();

Method method_from_tag(const std::string& tag);  // throws ConfigError on unknown tag
std::string method_tag(Method m);
std::string method_display(Method m);  // table name, e.g. "QWalkVec*"

// Whether the embedding stage carries learnable parameters (the Tr. column).
bool method_trainable(Method m);

// Descriptor generator behind a method; kNone for the classical controls.
enum class Generator { kNone, kVqc, kQuop, kQwalk, kQpe };

Generator method_generator(Method m);
bool generator_cacheable(Generator g);   // true for the training-independent ones
std::string generator_key(Generator g);  // descriptor-cache key: "quop", "qwalkvec", "qpe"

}  // namespace qgb
