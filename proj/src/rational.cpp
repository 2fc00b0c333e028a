// Copyright 2026 The Arbor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "arbor/rational.hpp"

#include "arbor/error.hpp"

namespace arbor {

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw InputError("rational with zero denominator");
  if (denominator < 0) {
    value_ = boost::multiprecision::cpp_rational(-Integer(numerator), -Integer(denominator));
  } else {
    value_ = boost::multiprecision::cpp_rational(numerator, denominator);
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InputError("rational division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::str() const { return numerator().str() + "/" + denominator().str(); }

std::ostream& operator<<(std::ostream& out, const Rational& r) { return out << r.str(); }

}  // namespace arbor
