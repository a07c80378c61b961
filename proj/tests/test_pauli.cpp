// Copyright 2026 The shorsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "shorsim/pauli.hpp"

#include <stdexcept>

#include "doctest.h"

using namespace shorsim;

TEST_CASE("parse/print round trip and weight") {
    SignedPauli p = parse_pauli("-ZZIIX");
    CHECK(p.sign == -1);
    CHECK(p.weight() == 3);
    CHECK(to_string(p) == "-ZZIIX");
    CHECK(to_string(parse_pauli("ZIZ")) == "+ZIZ");
    CHECK_THROWS_AS(parse_pauli(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_pauli("+ZQ"), std::invalid_argument);
}

TEST_CASE("multiplication stays in the real-signed group for Z/X strings") {
    SignedPauli z01 = parse_pauli("+ZZI");
    SignedPauli z12 = parse_pauli("+IZZ");
    CHECK(to_string(multiply(z01, z12)) == "+ZIZ");
    CHECK(to_string(multiply(z01, z01)) == "+III");
    CHECK(to_string(multiply(parse_pauli("-ZZI"), parse_pauli("+ZZI"))) == "-III");

    // Disjoint X and Z supports commute with a real sign.
    CHECK(to_string(multiply(parse_pauli("+XII"), parse_pauli("+IZZ"))) == "+XZZ");
    // Y·Y and Y·X on the same qubit have real phases too.
    CHECK(to_string(multiply(parse_pauli("+Y"), parse_pauli("+Y"))) == "+I");

    // Same-qubit X·Z would carry ±i.
    CHECK_THROWS_AS(multiply(parse_pauli("+X"), parse_pauli("+Z")), std::invalid_argument);
    // An even number of such collisions is real again: XX·ZZ = -YY.
    CHECK(to_string(multiply(parse_pauli("+XX"), parse_pauli("+ZZ"))) == "-YY");
}

TEST_CASE("commutation via symplectic overlap") {
    CHECK(parse_pauli("+ZZI").commutes_with(parse_pauli("+XXI")));
    CHECK(!parse_pauli("+ZII").commutes_with(parse_pauli("+XII")));
    CHECK(parse_pauli("+ZZZ").commutes_with(parse_pauli("+ZIZ")));
    CHECK(parse_pauli("+ZZZ").commutes_with(parse_pauli("+XXI")));
    CHECK(!parse_pauli("+ZZZ").commutes_with(parse_pauli("+XII")));
}

TEST_CASE("mask constructors") {
    CHECK(to_string(SignedPauli::z_string(4, 0b1001)) == "+ZIIZ");
    CHECK(to_string(SignedPauli::x_string(4, 0b0110, -1)) == "-IXXI");
    CHECK(SignedPauli::z_string(3, 0b101).x_mask() == 0);
    CHECK(SignedPauli::z_string(3, 0b101).z_mask() == 0b101);
    CHECK(SignedPauli::identity(2).is_identity());
}
