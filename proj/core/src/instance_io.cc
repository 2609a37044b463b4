// Copyright 2026 The Authors.
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

#include "secretary/instance_io.h"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace secretary {

namespace {

using Json = nlohmann::json;

[[noreturn]] void Fail(const std::string& message) { throw std::invalid_argument(message); }

Rational RationalFromJson(const Json& value) {
  if (value.is_number_integer()) {
    return Rational(value.get<std::int64_t>());
  }
  if (value.is_string()) {
    return ParseRational(value.get<std::string>());
  }
  Fail("exact values must be JSON integers or strings, got: " + value.dump());
}

std::vector<Rational> RationalVectorFromJson(const Json& value, const char* what) {
  if (!value.is_array()) Fail(std::string(what) + " must be an array");
  std::vector<Rational> result;
  result.reserve(value.size());
  for (const Json& entry : value) result.push_back(RationalFromJson(entry));
  return result;
}

std::vector<int> IntVectorFromJson(const Json& value, const char* what) {
  if (!value.is_array()) Fail(std::string(what) + " must be an array");
  std::vector<int> result;
  result.reserve(value.size());
  for (const Json& entry : value) {
    if (!entry.is_number_integer()) Fail(std::string(what) + " must hold integers");
    result.push_back(entry.get<int>());
  }
  return result;
}

std::vector<std::vector<int>> IntMatrixFromJson(const Json& value, const char* what) {
  if (!value.is_array()) Fail(std::string(what) + " must be an array");
  std::vector<std::vector<int>> result;
  result.reserve(value.size());
  for (const Json& row : value) result.push_back(IntVectorFromJson(row, what));
  return result;
}

std::vector<std::pair<int, int>> EdgeListFromJson(const Json& value, const char* what) {
  std::vector<std::pair<int, int>> edges;
  if (!value.is_array()) Fail(std::string(what) + " must be an array of [u, v] pairs");
  for (const Json& entry : value) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer()) {
      Fail(std::string(what) + " must be an array of [u, v] pairs");
    }
    edges.emplace_back(entry[0].get<int>(), entry[1].get<int>());
  }
  return edges;
}

const Json& Require(const Json& doc, const char* key, const char* context) {
  auto it = doc.find(key);
  if (it == doc.end()) Fail(std::string(context) + " is missing the \"" + key + "\" field");
  return *it;
}

int RequireInt(const Json& doc, const char* key, const char* context) {
  const Json& value = Require(doc, key, context);
  if (!value.is_number_integer()) {
    Fail(std::string(context) + " field \"" + key + "\" must be an integer");
  }
  return value.get<int>();
}

MatroidPtr MatroidFromJsonValue(const Json& doc) {
  if (!doc.is_object()) Fail("a matroid must be a JSON object");
  const Json& type_value = Require(doc, "type", "a matroid");
  if (!type_value.is_string()) Fail("matroid \"type\" must be a string");
  const std::string type = type_value.get<std::string>();

  if (type == "uniform") {
    return std::make_shared<UniformMatroid>(RequireInt(doc, "ground_size", "uniform matroid"),
                                            RequireInt(doc, "rank", "uniform matroid"));
  }
  if (type == "partition") {
    auto blocks = IntMatrixFromJson(Require(doc, "blocks", "partition matroid"), "blocks");
    auto caps = IntVectorFromJson(Require(doc, "caps", "partition matroid"), "caps");
    return std::make_shared<PartitionMatroid>(std::move(blocks), std::move(caps));
  }
  if (type == "laminar") {
    const int n = RequireInt(doc, "ground_size", "laminar matroid");
    auto sets = IntMatrixFromJson(Require(doc, "sets", "laminar matroid"), "sets");
    auto caps = IntVectorFromJson(Require(doc, "caps", "laminar matroid"), "caps");
    return std::make_shared<LaminarMatroid>(n, std::move(sets), std::move(caps));
  }
  if (type == "graphic") {
    const int vertices = RequireInt(doc, "vertex_count", "graphic matroid");
    auto edges = EdgeListFromJson(Require(doc, "edges", "graphic matroid"), "edges");
    return std::make_shared<GraphicMatroid>(vertices, std::move(edges));
  }
  if (type == "transversal") {
    const int n = RequireInt(doc, "ground_size", "transversal matroid");
    const int right = RequireInt(doc, "right_count", "transversal matroid");
    auto adjacency =
        IntMatrixFromJson(Require(doc, "adjacency", "transversal matroid"), "adjacency");
    return std::make_shared<TransversalMatroid>(n, right, std::move(adjacency));
  }
  if (type == "linear") {
    const Json& columns_value = Require(doc, "columns", "linear matroid");
    if (!columns_value.is_array()) Fail("linear matroid \"columns\" must be an array");
    std::vector<std::vector<Rational>> columns;
    columns.reserve(columns_value.size());
    for (const Json& column : columns_value) {
      columns.push_back(RationalVectorFromJson(column, "a matrix column"));
    }
    return std::make_shared<LinearMatroid>(std::move(columns));
  }
  if (type == "dual") {
    return std::make_shared<DualMatroid>(MatroidFromJsonValue(Require(doc, "base", "dual matroid")));
  }
  if (type == "restriction") {
    auto base = MatroidFromJsonValue(Require(doc, "base", "restriction matroid"));
    auto keep = IntVectorFromJson(Require(doc, "keep", "restriction matroid"), "keep");
    return std::make_shared<RestrictionMatroid>(std::move(base), std::move(keep));
  }
  if (type == "direct_sum") {
    const Json& components_value = Require(doc, "components", "direct-sum matroid");
    if (!components_value.is_array()) Fail("direct-sum \"components\" must be an array");
    std::vector<MatroidPtr> components;
    components.reserve(components_value.size());
    for (const Json& component : components_value) {
      components.push_back(MatroidFromJsonValue(component));
    }
    return std::make_shared<DirectSumMatroid>(std::move(components));
  }
  Fail("unknown matroid type: " + type);
}

SubmodularPtr ObjectiveFromJsonValue(const Json& doc) {
  if (!doc.is_object()) Fail("an objective must be a JSON object");
  const Json& type_value = Require(doc, "type", "an objective");
  if (!type_value.is_string()) Fail("objective \"type\" must be a string");
  const std::string type = type_value.get<std::string>();

  if (type == "coverage") {
    const int universe = RequireInt(doc, "universe_size", "coverage objective");
    auto covers = IntMatrixFromJson(Require(doc, "covers", "coverage objective"), "covers");
    return std::make_shared<CoverageFunction>(universe, std::move(covers));
  }
  if (type == "cut") {
    const int vertices = RequireInt(doc, "vertex_count", "cut objective");
    auto edges = EdgeListFromJson(Require(doc, "edges", "cut objective"), "edges");
    std::vector<Rational> edge_weights;
    if (doc.contains("edge_weights")) {
      edge_weights = RationalVectorFromJson(doc["edge_weights"], "edge_weights");
    }
    return std::make_shared<CutFunction>(vertices, std::move(edges), std::move(edge_weights));
  }
  if (type == "weighted_rank") {
    auto matroid = MatroidFromJsonValue(Require(doc, "matroid", "weighted-rank objective"));
    auto weights =
        RationalVectorFromJson(Require(doc, "weights", "weighted-rank objective"), "weights");
    return std::make_shared<WeightedRankFunction>(std::move(matroid), std::move(weights));
  }
  if (type == "modular") {
    auto weights = RationalVectorFromJson(Require(doc, "weights", "modular objective"), "weights");
    Rational offset = 0;
    if (doc.contains("offset")) offset = RationalFromJson(doc["offset"]);
    return std::make_shared<ModularFunction>(std::move(weights), std::move(offset));
  }
  Fail("unknown objective type: " + type);
}

Json RationalVectorToJson(const std::vector<Rational>& values) {
  Json array = Json::array();
  for (const Rational& value : values) array.push_back(RationalToString(value));
  return array;
}

Json MatroidToJsonValue(const Matroid& matroid) {
  Json doc;
  if (const auto* uniform = dynamic_cast<const UniformMatroid*>(&matroid)) {
    doc["type"] = "uniform";
    doc["ground_size"] = uniform->GroundSize();
    doc["rank"] = uniform->UniformRank();
    return doc;
  }
  if (const auto* partition = dynamic_cast<const PartitionMatroid*>(&matroid)) {
    doc["type"] = "partition";
    doc["blocks"] = partition->Blocks();
    Json caps = Json::array();
    for (int b = 0; b < partition->BlockCount(); ++b) caps.push_back(partition->CapOf(b));
    doc["caps"] = std::move(caps);
    return doc;
  }
  if (const auto* laminar = dynamic_cast<const LaminarMatroid*>(&matroid)) {
    doc["type"] = "laminar";
    doc["ground_size"] = laminar->GroundSize();
    Json sets = Json::array();
    Json caps = Json::array();
    for (int i = 0; i < laminar->FamilyCount(); ++i) {
      sets.push_back(laminar->FamilySet(i));
      caps.push_back(laminar->FamilyCap(i));
    }
    doc["sets"] = std::move(sets);
    doc["caps"] = std::move(caps);
    return doc;
  }
  if (const auto* graphic = dynamic_cast<const GraphicMatroid*>(&matroid)) {
    doc["type"] = "graphic";
    doc["vertex_count"] = graphic->VertexCount();
    Json edges = Json::array();
    for (ElementId e = 0; e < graphic->GroundSize(); ++e) {
      const auto [u, v] = graphic->Endpoints(e);
      edges.push_back(Json::array({u, v}));
    }
    doc["edges"] = std::move(edges);
    return doc;
  }
  if (const auto* transversal = dynamic_cast<const TransversalMatroid*>(&matroid)) {
    doc["type"] = "transversal";
    doc["ground_size"] = transversal->GroundSize();
    doc["right_count"] = transversal->RightCount();
    Json adjacency = Json::array();
    for (ElementId e = 0; e < transversal->GroundSize(); ++e) {
      adjacency.push_back(transversal->Neighbors(e));
    }
    doc["adjacency"] = std::move(adjacency);
    return doc;
  }
  if (const auto* linear = dynamic_cast<const LinearMatroid*>(&matroid)) {
    doc["type"] = "linear";
    Json columns = Json::array();
    for (ElementId e = 0; e < linear->GroundSize(); ++e) {
      columns.push_back(RationalVectorToJson(linear->Column(e)));
    }
    doc["columns"] = std::move(columns);
    return doc;
  }
  if (const auto* dual = dynamic_cast<const DualMatroid*>(&matroid)) {
    doc["type"] = "dual";
    doc["base"] = MatroidToJsonValue(dual->Base());
    return doc;
  }
  if (const auto* restriction = dynamic_cast<const RestrictionMatroid*>(&matroid)) {
    doc["type"] = "restriction";
    doc["base"] = MatroidToJsonValue(restriction->Base());
    doc["keep"] = restriction->Kept();
    return doc;
  }
  if (const auto* direct_sum = dynamic_cast<const DirectSumMatroid*>(&matroid)) {
    doc["type"] = "direct_sum";
    Json components = Json::array();
    for (const MatroidPtr& component : direct_sum->Components()) {
      components.push_back(MatroidToJsonValue(*component));
    }
    doc["components"] = std::move(components);
    return doc;
  }
  Fail("this matroid class has no JSON form");
}

Json ObjectiveToJsonValue(const SubmodularFunction& objective) {
  Json doc;
  if (const auto* coverage = dynamic_cast<const CoverageFunction*>(&objective)) {
    doc["type"] = "coverage";
    doc["universe_size"] = coverage->UniverseSize();
    doc["covers"] = coverage->Covers();
    return doc;
  }
  if (const auto* cut = dynamic_cast<const CutFunction*>(&objective)) {
    doc["type"] = "cut";
    doc["vertex_count"] = cut->GroundSize();
    Json edges = Json::array();
    for (const auto& [u, v] : cut->Edges()) edges.push_back(Json::array({u, v}));
    doc["edges"] = std::move(edges);
    doc["edge_weights"] = RationalVectorToJson(cut->EdgeWeights());
    return doc;
  }
  if (const auto* rank = dynamic_cast<const WeightedRankFunction*>(&objective)) {
    doc["type"] = "weighted_rank";
    doc["matroid"] = MatroidToJsonValue(rank->BaseMatroid());
    doc["weights"] = RationalVectorToJson(rank->Weights());
    return doc;
  }
  if (const auto* modular = dynamic_cast<const ModularFunction*>(&objective)) {
    doc["type"] = "modular";
    doc["weights"] = RationalVectorToJson(modular->Weights());
    doc["offset"] = RationalToString(modular->Offset());
    return doc;
  }
  Fail("this objective class has no JSON form");
}

}  // namespace

SecretaryInstance InstanceFromJson(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& error) {
    Fail(std::string("invalid JSON: ") + error.what());
  }
  if (!doc.is_object()) Fail("an instance must be a JSON object");

  SecretaryInstance instance;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) Fail("instance \"name\" must be a string");
    instance.name = doc["name"].get<std::string>();
  }
  instance.weights = RationalVectorFromJson(Require(doc, "weights", "an instance"), "weights");
  const Json& matroids_value = Require(doc, "matroids", "an instance");
  if (!matroids_value.is_array() || matroids_value.empty()) {
    Fail("instance \"matroids\" must be a nonempty array");
  }
  for (const Json& matroid : matroids_value) {
    instance.constraint.matroids.push_back(MatroidFromJsonValue(matroid));
  }
  if (doc.contains("objective")) {
    instance.objective = ObjectiveFromJsonValue(doc["objective"]);
  }
  instance.Validate();
  return instance;
}

std::string InstanceToJson(const SecretaryInstance& instance) {
  Json doc;
  doc["name"] = instance.name;
  doc["weights"] = RationalVectorToJson(instance.weights);
  Json matroids = Json::array();
  for (const MatroidPtr& matroid : instance.constraint.matroids) {
    matroids.push_back(MatroidToJsonValue(*matroid));
  }
  doc["matroids"] = std::move(matroids);
  if (instance.objective != nullptr) {
    doc["objective"] = ObjectiveToJsonValue(*instance.objective);
  }
  return doc.dump(2) + "\n";
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteTextFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) Fail("cannot write file: " + path);
  out << content;
  if (!out) Fail("failed while writing file: " + path);
}

SecretaryInstance LoadInstanceFile(const std::string& path) {
  return InstanceFromJson(ReadTextFile(path));
}

void SaveInstanceFile(const std::string& path, const SecretaryInstance& instance) {
  WriteTextFile(path, InstanceToJson(instance));
}

}  // namespace secretary
