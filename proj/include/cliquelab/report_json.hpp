// Copyright 2026 The cliquelab Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <json.hpp>

#include "cliquelab/cliquepoly.hpp"
#include "cliquelab/interlace.hpp"
#include "cliquelab/polynomial.hpp"
#include "cliquelab/roots.hpp"
#include "cliquelab/scan.hpp"
#include "cliquelab/theorems.hpp"

namespace cliquelab {

// Integers that fit in 64 bits are written as JSON numbers, larger ones as
// decimal strings.
nlohmann::json to_json(const Integer& z);
nlohmann::json to_json(const IntPolynomial& p);
nlohmann::json to_json(const CliqueVector& counts);
/// null for NegativeInfinity; otherwise defining polynomial, "p/q"
/// interval endpoints, multiplicity and a 12-digit approximation.
nlohmann::json to_json(const ExtendedRoot& root);
nlohmann::json to_json(const RootReport& report);
nlohmann::json to_json(const LemmaFamilyReport& report);
nlohmann::json to_json(const StressSummary& summary);
nlohmann::json to_json(const PropositionResult& result);
nlohmann::json to_json(const ScanRecord& record);
nlohmann::json to_json(const ScanSummary& summary);

}  // namespace cliquelab
