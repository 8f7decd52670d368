#pragma once

#include <iosfwd>
#include <string>

#include "simstring/features.hpp"

namespace simstring {

// Shortest-exact decimal rendering (17 significant digits, round-trippable).
std::string formatValue(double value);

// Header: feature names then "label"; one row per instance.
void writeCsv(std::ostream& out, const FeatureTable& table);
void writeCsvFile(const std::string& path, const FeatureTable& table);

// Reads the CSV written by writeCsv. The last column must be "label".
// Errors carry "source:line:" context.
FeatureTable readCsv(std::istream& in, const std::string& source = "<stream>");
FeatureTable readCsvFile(const std::string& path);

// ARFF export: numeric attributes plus a nominal class attribute.
void writeArff(std::ostream& out, const FeatureTable& table, const std::string& relation);

}  // namespace simstring
