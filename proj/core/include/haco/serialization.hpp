// Copyright 2026 The Haco Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HACO_SERIALIZATION_HPP_
#define HACO_SERIALIZATION_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "haco/dirichlet.hpp"
#include "haco/hausdorff.hpp"
#include "haco/verify.hpp"

namespace haco {

// JSON schemas for all on-disk artifacts. Every file carries an explicit
// group descriptor where one is meaningful, so group and family mismatches
// are detected at load time rather than mid-computation. Characters encode
// as: integer array (z_lex), [index, value] pairs (z_inf_lex), and
// [numerator, denominator] (rationals; components become decimal strings
// when they leave the 64-bit range). All emitted files re-parse to equal
// in-memory values.

std::string to_json_string(const Spectrum& s, int indent = 2);
std::string to_json_string(const HausdorffOperator& h, int indent = 2);
std::string to_json_string(const DirichletPolynomial& d, int indent = 2);
std::string to_json_string(const VerificationReport& report, int indent = 2);
std::string root_weights_to_json(const std::vector<RootWeight>& weights,
                                 int indent = 2);

Spectrum spectrum_from_json(const std::string& text);
HausdorffOperator operator_from_json(const std::string& text);
DirichletPolynomial dirichlet_from_json(const std::string& text);
std::vector<RootWeight> root_weights_from_json(const std::string& text);

// Extracts the (u, weight) kernel of an operator whose terms are all
// forward sigma_u maps on z_inf_lex; anything else is a validation error.
std::vector<SigmaWeight> sigma_weights_from_operator(
    const HausdorffOperator& h);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path,
                     const std::string& text);

bool operator==(const OperatorTerm& a, const OperatorTerm& b);
bool same_operator(const HausdorffOperator& a, const HausdorffOperator& b);

}  // namespace haco

#endif  // HACO_SERIALIZATION_HPP_
