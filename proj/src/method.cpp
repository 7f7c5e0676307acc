#include "qgb/method.hpp"

#include "qgb/error.hpp"

namespace qgb {

const std::vector<Method>& all_methods() {
  static const std::vector<Method> kOrder = {
      Method::kFixed,    Method::kMlp,      Method::kAngleVqc,
      Method::kQuop,     Method::kQuopTrainable,
      Method::kQwalkVec, Method::kQwalkVecTrainable,
      Method::kQpe,
  };
  return kOrder;
}

Method method_from_tag(const std::string& tag) {
  for (Method m : all_methods())
    if (method_tag(m) == tag) return m;
  throw ConfigError("unknown method tag '" + tag + "'");
}

std::string method_tag(Method m) {
  switch (m) {
    case Method::kFixed: return "fixed";
    case Method::kMlp: return "mlp";
    case Method::kAngleVqc: return "angle-vqc";
    case Method::kQuop: return "quop";
    case Method::kQuopTrainable: return "quop-trainable";
    case Method::kQwalkVec: return "qwalkvec";
    case Method::kQwalkVecTrainable: return "qwalkvec-trainable";
    case Method::kQpe: return "qpe";
  }
  throw ConfigError("bad method enum");
}

std::string method_display(Method m) {
  switch (m) {
    case Method::kFixed: return "Fixed";
    case Method::kMlp: return "MLP";
    case Method::kAngleVqc: return "Angle-VQC";
    case Method::kQuop: return "QuOp";
    case Method::kQuopTrainable: return "QuOp*";
    case Method::kQwalkVec: return "QWalkVec";
    case Method::kQwalkVecTrainable: return "QWalkVec*";
    case Method::kQpe: return "QPE";
  }
  throw ConfigError("bad method enum");
}

bool method_trainable(Method m) {
  switch (m) {
    case Method::kMlp:
    case Method::kAngleVqc:
    case Method::kQuopTrainable:
    case Method::kQwalkVecTrainable:
      return true;
    default:
      return false;
  }
}

Generator method_generator(Method m) {
  switch (m) {
    case Method::kAngleVqc: return Generator::kVqc;
    case Method::kQuop:
    case Method::kQuopTrainable: return Generator::kQuop;
    case Method::kQwalkVec:
    case Method::kQwalkVecTrainable: return Generator::kQwalk;
    case Method::kQpe: return Generator::kQpe;
    default: return Generator::kNone;
  }
}

bool generator_cacheable(Generator g) {
  return g == Generator::kQuop || g == Generator::kQwalk || g == Generator::kQpe;
}

std::string generator_key(Generator g) {
  switch (g) {
    case Generator::kQuop: return "quop";
    case Generator::kQwalk: return "qwalkvec";
    case Generator::kQpe: return "qpe";
    case Generator::kVqc: return "vqc";
    case Generator::kNone: return "none";
  }
  throw ConfigError("bad generator enum");
}

}  // namespace qgb
