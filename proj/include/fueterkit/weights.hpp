#pragma once

#include <functional>
#include <string>

#include "fueterkit/multi_index.hpp"

namespace fueterkit {

/// Family of non-null real weights c_alpha defining a weighted module of
/// Fueter series. Drury-Arveson: c_alpha = alpha!/|alpha|!; Fock:
/// c_alpha = alpha!.
class WeightFamily {
 public:
  static WeightFamily drury_arveson() {
    return WeightFamily("drury_arveson", [](const MultiIndex& a) {
      return Rational(mi_factorial(a), factorial(mi_total(a)));
    });
  }
  static WeightFamily fock() {
    return WeightFamily("fock",
                        [](const MultiIndex& a) { return Rational(mi_factorial(a)); });
  }
  static WeightFamily custom(std::string name, std::function<Rational(const MultiIndex&)> fn) {
    return WeightFamily(std::move(name), std::move(fn));
  }
  static WeightFamily by_name(const std::string& name) {
    if (name == "drury_arveson" || name == "da") return drury_arveson();
    if (name == "fock") return fock();
    throw ParseError("unknown weight family '" + name + "'");
  }

  const std::string& name() const { return name_; }
  Rational c(const MultiIndex& a) const {
    Rational v = fn_(a);
    if (v == 0) throw ShapeError("weight family produced a zero weight");
    return v;
  }

 private:
  WeightFamily(std::string name, std::function<Rational(const MultiIndex&)> fn)
      : name_(std::move(name)), fn_(std::move(fn)) {}
  std::string name_;
  std::function<Rational(const MultiIndex&)> fn_;
};

}  // namespace fueterkit
