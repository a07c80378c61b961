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

#include <bit>
#include <stdexcept>

namespace shorsim {

namespace {

void check_letter(char c) {
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
        throw std::invalid_argument("invalid Pauli letter: " + std::string(1, c));
    }
}

// Phase exponent k (i^k) picked up by the single-qubit product a*b, plus the
// resulting letter.
char single_product(char a, char b, int& phase_exp) {
    if (a == 'I') return b;
    if (b == 'I') return a;
    if (a == b) return 'I';
    // XY=iZ, YZ=iX, ZX=iY and the reverses pick up -i.
    auto cyclic = [](char x, char y) {
        return (x == 'X' && y == 'Y') || (x == 'Y' && y == 'Z') || (x == 'Z' && y == 'X');
    };
    char out;
    if ((a == 'X' && b == 'Y') || (a == 'Y' && b == 'X')) out = 'Z';
    else if ((a == 'Y' && b == 'Z') || (a == 'Z' && b == 'Y')) out = 'X';
    else out = 'Y';
    phase_exp += cyclic(a, b) ? 1 : 3;
    return out;
}

}  // namespace

int SignedPauli::weight() const {
    int w = 0;
    for (char c : letters) w += (c != 'I');
    return w;
}

std::uint32_t SignedPauli::x_mask() const {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (letters[i] == 'X' || letters[i] == 'Y') m |= (1u << i);
    }
    return m;
}

std::uint32_t SignedPauli::z_mask() const {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (letters[i] == 'Z' || letters[i] == 'Y') m |= (1u << i);
    }
    return m;
}

bool SignedPauli::commutes_with(const SignedPauli& other) const {
    if (letters.size() != other.letters.size()) {
        throw std::invalid_argument("Pauli size mismatch");
    }
    // Strings commute iff the symplectic product is even.
    std::uint32_t cross = (x_mask() & other.z_mask()) ^ (z_mask() & other.x_mask());
    return (std::popcount(cross) % 2) == 0;
}

SignedPauli SignedPauli::identity(int n) {
    return SignedPauli{+1, std::string(std::size_t(n), 'I')};
}

SignedPauli SignedPauli::z_string(int n, std::uint32_t mask, int sign) {
    SignedPauli p = identity(n);
    p.sign = sign;
    for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) p.letters[std::size_t(i)] = 'Z';
    }
    return p;
}

SignedPauli SignedPauli::x_string(int n, std::uint32_t mask, int sign) {
    SignedPauli p = identity(n);
    p.sign = sign;
    for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) p.letters[std::size_t(i)] = 'X';
    }
    return p;
}

SignedPauli multiply(const SignedPauli& a, const SignedPauli& b) {
    if (a.letters.size() != b.letters.size()) {
        throw std::invalid_argument("Pauli size mismatch");
    }
    SignedPauli out;
    out.letters.resize(a.letters.size());
    int phase_exp = 0;  // accumulated i^k
    for (std::size_t i = 0; i < a.letters.size(); ++i) {
        out.letters[i] = single_product(a.letters[i], b.letters[i], phase_exp);
    }
    phase_exp %= 4;
    if (phase_exp == 1 || phase_exp == 3) {
        throw std::invalid_argument("Pauli product has imaginary phase");
    }
    out.sign = a.sign * b.sign * (phase_exp == 2 ? -1 : +1);
    return out;
}

std::string to_string(const SignedPauli& p) {
    return (p.sign >= 0 ? "+" : "-") + p.letters;
}

SignedPauli parse_pauli(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty Pauli string");
    SignedPauli p;
    std::size_t start = 0;
    if (text[0] == '+' || text[0] == '-') {
        p.sign = text[0] == '+' ? +1 : -1;
        start = 1;
    }
    p.letters = text.substr(start);
    if (p.letters.empty()) throw std::invalid_argument("Pauli string has no letters");
    for (char c : p.letters) check_letter(c);
    return p;
}

}  // namespace shorsim
