// Copyright 2026 The Mosaic Authors.
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

#include "mosaic/cli.h"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "mosaic/errors.h"
#include "mosaic/pipeline.h"
#include "mosaic/settings.h"

namespace mosaic {
namespace {

bool IsStartupError(ErrorCode code) {
  switch (code) {
    case ErrorCode::kConfig:
    case ErrorCode::kLoad:
    case ErrorCode::kParse:
    case ErrorCode::kValidation:
      return true;
    default:
      return false;
  }
}

}  // namespace

int RunCli(const std::vector<std::string> &args, CliStreams streams) {
  CLI::App app{"Annotate text with SKOS, WordNet, DBpedia and MetaMap concepts",
               "mosaic"};
  std::string config_path = "settings.cfg";
  std::optional<std::string> input_path;
  std::string output_path = "-";
  std::optional<std::string> sources;
  std::optional<std::string> fixed_time;
  app.add_option("--config", config_path, "Settings file")
      ->capture_default_str();
  app.add_option("--input", input_path, "Input text file, or - for stdin");
  app.add_option("--output", output_path, "Output JSON file, or - for stdout")
      ->capture_default_str();
  app.add_option("--sources", sources,
                 "Comma-separated sources, overriding the settings file");
  app.add_option("--fixed-time", fixed_time,
                 "RFC 3339 timestamp used for every provenance record");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    streams.out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    streams.err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  if (!input_path && streams.stdin_is_terminal) {
    streams.err << "error: no input; pass --input <file> or redirect stdin\n"
                << app.help();
    return kExitUsage;
  }

  Clock clock = SystemClock();
  if (fixed_time) {
    try {
      clock = FrozenClock(ParseRfc3339(*fixed_time));
    } catch (const Error &e) {
      streams.err << "error: --fixed-time: " << e.what() << "\n";
      return kExitUsage;
    }
  }

  std::optional<Annotator> annotator;
  try {
    Settings settings = ReadSettings(config_path);
    if (sources) settings.sources = ParseSourceList(*sources);
    annotator.emplace(std::move(settings), clock);
  } catch (const Error &e) {
    streams.err << "error: " << e.what() << "\n";
    return IsStartupError(e.code()) ? kExitConfig : kExitRuntime;
  }

  std::string text;
  if (!input_path || *input_path == "-") {
    std::ostringstream buf;
    buf << streams.in.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(*input_path, std::ios::binary);
    if (!in) {
      streams.err << "error: cannot read input file " << *input_path << "\n";
      return kExitUsage;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  std::string json;
  try {
    json = SerializeDocument(annotator->Annotate(text));
  } catch (const Error &e) {
    streams.err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }

  if (output_path == "-") {
    streams.out << json;
    streams.out.flush();
  } else {
    std::ofstream out(output_path, std::ios::binary);
    out << json;
    if (!out) {
      streams.err << "error: cannot write output file " << output_path << "\n";
      return kExitRuntime;
    }
  }
  return kExitOk;
}

}  // namespace mosaic
