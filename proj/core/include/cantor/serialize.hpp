#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "cantor/cylinder.hpp"
#include "cantor/extension.hpp"
#include "cantor/kernel.hpp"
#include "cantor/measure.hpp"
#include "cantor/point_process.hpp"
#include "cantor/selectors.hpp"

namespace cantor {

using Artifact = std::variant<DyadicMeasure, FiniteKernel, ConsistentTower, PointConfig, CylinderSet, ClosedTree, WordMap>;

/// Header keyword of the artifact's file format ("measure", "kernel", ...).
std::string_view artifact_kind(const Artifact& a);

/// Parses one artifact. Validation failures are rethrown as ParseError with the line number
/// where the offending data ends.
Artifact parse_artifact(std::string_view text, int depth_cap = kDefaultDepthCap);
Artifact parse_artifact_file(const std::filesystem::path& path, int depth_cap = kDefaultDepthCap);

/// Like parse_artifact but requires a specific type; the error names what was found instead.
template <class T>
T parse_as(std::string_view text, int depth_cap = kDefaultDepthCap) {
  Artifact a = parse_artifact(text, depth_cap);
  if (auto* v = std::get_if<T>(&a)) return std::move(*v);
  throw Error(Errc::UnknownHeader, "unexpected artifact '" + std::string(artifact_kind(a)) + "'");
}

std::string serialize(const DyadicMeasure& m);
std::string serialize(const FiniteKernel& k);
std::string serialize(const ConsistentTower& t);
std::string serialize(const PointConfig& p);
std::string serialize(const CylinderSet& s);
std::string serialize(const ClosedTree& t);
std::string serialize(const WordMap& f);
std::string serialize(const Artifact& a);

}  // namespace cantor
