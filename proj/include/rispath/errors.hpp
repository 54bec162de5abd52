// SPDX-License-Identifier: Apache-2.0
//
// rispath: physical path loss modelling for RIS-enabled radio channels
// Copyright (C) 2026 The rispath Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace rispath {

// Terminal placed in or behind the reflecting plane, degenerate element
// coincidence, and similar geometric impossibilities.
class geometry_error : public std::runtime_error {
  public:
    explicit geometry_error(const std::string &msg) : std::runtime_error(msg) {}
};

// Parameter outside the validity range of the scattering model (negative
// pattern exponent, broadside gain below the isotropic floor, ...).
class model_domain_error : public std::runtime_error {
  public:
    explicit model_domain_error(const std::string &msg) : std::runtime_error(msg) {}
};

// A closed form has no finite solution for the requested inputs
// (e.g. sizing a surface for a terminal at grazing incidence).
class divergence_error : public std::runtime_error {
  public:
    explicit divergence_error(const std::string &msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent scenario/sweep input. `field()` names the
// offending key as a dotted path into the configuration document.
class config_error : public std::runtime_error {
  public:
    config_error(const std::string &field, const std::string &reason)
        : std::runtime_error(field.empty() ? reason : field + ": " + reason), field_(field) {}

    const std::string &field() const { return field_; }

  private:
    std::string field_;
};

// Requested computation exceeds a configured resource budget.
class resource_limit_error : public std::runtime_error {
  public:
    explicit resource_limit_error(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace rispath
