#pragma once

#include "homhopf/semidual.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace homhopf::cli {

// An input error located by a JSON pointer into the document.
class SchemaError : public Error {
 public:
  SchemaError(std::string pointer, std::string const& what)
      : Error(Errc::SchemaError, pointer + ": " + what), pointer_(std::move(pointer)), detail_(what) {}
  std::string const& pointer() const { return pointer_; }
  std::string const& detail() const { return detail_; }

 private:
  std::string pointer_;
  std::string detail_;
};

struct Pipeline {
  std::string command;
  std::map<std::string, std::string> refs;  // role -> section entry name
  std::optional<int> degree;
  std::optional<int> weight_bound;
  std::optional<bool> order_constraint;
};

struct InputDocument {
  std::map<std::string, HomHopf> hopf;
  std::map<std::string, HomLie> hom_lie;
  std::map<std::string, ActionData> actions;
  std::map<std::string, LieAction> lie_actions;
  std::map<std::string, CoactionData> coactions;
  // acting (or coacting) and carrier names of every action and coaction
  std::map<std::string, std::pair<std::string, std::string>> links;
  Pipeline pipeline;
};

InputDocument parse_input(nlohmann::json const& doc);
InputDocument parse_input_file(std::string const& path);

struct Options {
  std::string command;
  std::optional<int> degree;
  std::optional<int> weight_bound;
  bool order_constraint = true;
  bool timing = false;
};

struct Section {
  std::string name;
  CheckReport checks;
};

struct ErrorInfo {
  std::string code;
  std::string message;
  std::string pointer;
};

struct RunReport {
  std::string command;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<std::pair<std::string, std::vector<int>>> dims;
  std::vector<Section> sections;
  std::vector<std::pair<std::string, HomHopf>> structures;
  std::optional<ErrorInfo> error;
  bool input_error = false;
  double seconds = -1;

  bool passed() const;
  int exit_code() const;  // 0 pass, 1 violations or module error, 2 input error
  CheckReport combined() const;
};

RunReport run(InputDocument const& doc, Options const& opts);

nlohmann::ordered_json hopf_to_json(HomHopf const& h);
nlohmann::ordered_json report_to_json(RunReport const& r);
std::string report_to_text(RunReport const& r);

}  // namespace homhopf::cli
