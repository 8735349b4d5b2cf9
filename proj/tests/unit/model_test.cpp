// Copyright 2026 The cookstate Authors
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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <set>

#include "cookstate/catalog.hpp"
#include "cookstate/serialization.hpp"
#include "cookstate/validation.hpp"
#include "oracles.hpp"

namespace cookstate {
namespace {

namespace fs = std::filesystem;

bool has_pair(const std::vector<PromptPair>& pairs, std::string_view pos, std::string_view neg,
              TemplateForm form, GazeArea gaze) {
  for (const auto& p : pairs) {
    if (p.positive == pos && p.negative == neg && p.template_form == form && p.gaze_area == gaze) {
      return true;
    }
  }
  return false;
}

TEST(EnumNames, RoundTrip) {
  for (auto f : {TemplateForm::A_simple, TemplateForm::B_with_change_desc,
                 TemplateForm::C_ingredient_first_simple,
                 TemplateForm::D_ingredient_first_with_change_desc}) {
    EXPECT_EQ(parse_template_form(to_string(f)), f);
  }
  for (auto k : {StateChangeKind::vaporization, StateChangeKind::melting,
                 StateChangeKind::protein_denaturation, StateChangeKind::maillard}) {
    EXPECT_EQ(parse_state_change_kind(to_string(k)), k);
  }
  EXPECT_EQ(parse_gaze_area("contents_only"), GazeArea::contents_only);
  EXPECT_EQ(parse_series_mode("discrete"), SeriesMode::discrete);
  EXPECT_THROW(parse_gaze_area("lid"), Error);
}

TEST(Catalog, VaporizationHasTableRowB) {
  const auto pairs = load_prompt_catalog(StateChangeKind::vaporization);
  EXPECT_TRUE(has_pair(pairs, "Boiling and bubbling water", "Not boiling liquid water",
                       TemplateForm::B_with_change_desc, GazeArea::entire_vessel));
  const auto b = find_prompt(pairs, "vaporization/(b)-entire");
  ASSERT_TRUE(b);
  EXPECT_EQ(b->positive, "Boiling and bubbling water");
}

TEST(Catalog, MeltingAndMaillardRowsB) {
  EXPECT_TRUE(has_pair(load_prompt_catalog(StateChangeKind::melting), "Melted liquid butter",
                       "Unmelted solid butter", TemplateForm::B_with_change_desc,
                       GazeArea::entire_vessel));
  EXPECT_TRUE(has_pair(load_prompt_catalog(StateChangeKind::maillard), "Sauteed and candied onions",
                       "Still raw and white onions", TemplateForm::B_with_change_desc,
                       GazeArea::entire_vessel));
  EXPECT_TRUE(has_pair(load_prompt_catalog(StateChangeKind::protein_denaturation),
                       "Egg that has been cooked and turned white",
                       "Egg that has not been cooked and is raw",
                       TemplateForm::D_ingredient_first_with_change_desc, GazeArea::contents_only));
}

TEST(Catalog, EachKindIsFourFormsTimesTwoGazeAreas) {
  for (auto kind : {StateChangeKind::vaporization, StateChangeKind::melting,
                    StateChangeKind::protein_denaturation, StateChangeKind::maillard}) {
    const auto pairs = load_prompt_catalog(kind);
    ASSERT_EQ(pairs.size(), 8u) << to_string(kind);
    std::set<std::pair<TemplateForm, GazeArea>> combos;
    for (const auto& p : pairs) combos.insert({p.template_form, p.gaze_area});
    EXPECT_EQ(combos.size(), 8u) << to_string(kind);
  }
}

TEST(Catalog, FullCatalogIsValidWithUniqueIds) {
  const auto all = load_full_catalog();
  ASSERT_EQ(all.size(), 32u);
  EXPECT_TRUE(validate_catalog(all).empty());
  std::set<std::string> ids;
  for (const auto& p : all) {
    EXPECT_TRUE(validate(p).empty()) << p.id;
    ids.insert(p.id);
  }
  EXPECT_EQ(ids.size(), 32u);
}

TEST(Catalog, RejectsDuplicateIdsAndEqualTexts) {
  std::vector<PromptPair> pairs{
      {"x", "hot", "cold", TemplateForm::A_simple, GazeArea::entire_vessel},
      {"x", "wet", "dry", TemplateForm::A_simple, GazeArea::entire_vessel},
      {"y", "same", "same", TemplateForm::A_simple, GazeArea::entire_vessel},
  };
  const auto v = validate_catalog(pairs);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0].field, "[1].id");
  EXPECT_EQ(v[1].field, "[2].negative");

  const auto dir = fs::temp_directory_path() / "cookstate_model_test";
  fs::create_directories(dir);
  EXPECT_THROW(write_catalog_file(dir / "bad.json", pairs), Error);
}

TEST(Catalog, EnvironmentOverrideAllowsUserCatalogs) {
  const auto dir = fs::temp_directory_path() / "cookstate_user_catalog";
  fs::create_directories(dir);
  const std::vector<PromptPair> custom{
      {"custom/(a)-entire", "Caramelized sugar", "White sugar", TemplateForm::A_simple,
       GazeArea::entire_vessel}};
  write_catalog_file(dir / "maillard.json", custom);
  ::setenv("COOKSTATE_CATALOG_DIR", dir.c_str(), 1);
  const auto loaded = load_prompt_catalog(StateChangeKind::maillard);
  ::unsetenv("COOKSTATE_CATALOG_DIR");
  EXPECT_EQ(loaded, custom);
}

ScoreSeries span_series(double first, double last, double step) {
  ScoreSeries s{"vaporization/(b)-entire", {}, SeriesMode::continuous};
  for (double t = first; t <= last + 1e-9; t += step) s.samples.push_back({t, 0.3, 0.2});
  return s;
}

SessionManifest manifest_with(std::optional<double> annotation) {
  return {"pot-1", StateChangeKind::vaporization, "same", annotation, "scores.jsonl",
          GazeArea::entire_vessel, SeriesMode::continuous};
}

TEST(ValidateManifest, AnnotationInsideSpan) {
  const auto r = validate_manifest(manifest_with(95.7), span_series(0, 120, 0.5));
  EXPECT_TRUE(r.ok()) << r.summary();
}

TEST(ValidateManifest, AnnotationOutsideSpan) {
  const auto r = validate_manifest(manifest_with(200.0), span_series(0, 120, 0.5));
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].field, "annotation_time");
  EXPECT_NE(r.violations[0].message.find("annotation outside series span"), std::string::npos);
}

TEST(ValidateManifest, EmptySeries) {
  ScoreSeries empty{"p", {}, SeriesMode::continuous};
  const auto r = validate_manifest(manifest_with(1.0), empty);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].field, "series.samples");
  EXPECT_EQ(r.violations[0].message, "series non-empty");
}

TEST(ValidateManifest, ReportsEveryViolationWithPath) {
  ScoreSeries s{"p", {{0.0, 0.1, 0.2}, {2.0, 0.1, 0.2}, {1.0, 0.1, 0.2}}, SeriesMode::continuous};
  auto m = manifest_with(-1.0);
  m.session_id.clear();
  const auto r = validate_manifest(m, s);
  std::set<std::string> fields;
  for (const auto& v : r.violations) fields.insert(v.field);
  EXPECT_TRUE(fields.count("session_id"));
  EXPECT_TRUE(fields.count("annotation_time"));
  EXPECT_TRUE(fields.count("series.samples[2].t"));
}

TEST(ValidateProfile, ThresholdAndWindowBounds) {
  RecognizerProfile p;
  p.prompt_pair = {"id", "a", "b", TemplateForm::A_simple, GazeArea::entire_vessel};
  EXPECT_TRUE(validate(p).empty());
  p.threshold = 1.5;
  p.smoothing = Smoothing::sma(0);
  p.temperature = 0.0;
  EXPECT_EQ(validate(p).size(), 3u);
}

TEST(ManifestJson, OptionalFieldsAndDefaults) {
  const auto m = manifest_from_json(R"({"session_id": "s", "state_change_kind": "melting",
      "heat_power": "different", "annotation_time": null, "score_source": "x.jsonl",
      "gaze_area": "contents_only"})");
  EXPECT_FALSE(m.annotation_time);
  EXPECT_EQ(m.mode, SeriesMode::continuous);
  EXPECT_EQ(m.state_change_kind, StateChangeKind::melting);
  EXPECT_THROW(manifest_from_json(R"({"session_id": "s"})"), Error);
}

TEST(ManifestJson, RandomRoundTripIsIdentity) {
  oracle::Random rng(11);
  for (int i = 0; i < 200; ++i) {
    SessionManifest m;
    m.session_id = "session-" + std::to_string(rng.integer(0, 1 << 20));
    m.state_change_kind = static_cast<StateChangeKind>(rng.integer(0, 3));
    m.heat_power = rng.integer(0, 1) ? "same" : "different \"high\"";
    if (rng.integer(0, 1)) m.annotation_time = rng.uniform(0.0, 1000.0);
    m.score_source = "dir/scores_" + std::to_string(i) + ".jsonl";
    m.gaze_area = static_cast<GazeArea>(rng.integer(0, 1));
    m.mode = static_cast<SeriesMode>(rng.integer(0, 1));
    const std::string text = manifest_to_json(m);
    const SessionManifest back = manifest_from_json(text);
    EXPECT_EQ(back, m);
    EXPECT_EQ(manifest_to_json(back), text);
  }
}

TEST(ProfileJson, RoundTripAndRejections) {
  RecognizerProfile p;
  p.prompt_pair = {"melting/(b)-entire", "Melted liquid butter", "Unmelted solid butter",
                   TemplateForm::B_with_change_desc, GazeArea::entire_vessel};
  p.smoothing = Smoothing::raw();
  p.threshold = 0.6180339887498949;
  p.detection_policy.min_consecutive = 3;
  p.temperature = 42.5;
  const auto text = profile_to_json(p);
  EXPECT_EQ(profile_from_json(text), p);

  auto bad = text;
  bad.replace(bad.find("0.6180339887498949"), 18, "1.25");
  EXPECT_THROW(profile_from_json(bad), Error);
}

TEST(ReportJson, InvariantDiffIffBothTimes) {
  EXPECT_THROW(report_from_json(R"({"session_id": "s", "status": "detected", "detected_time": 3.0,
      "annotation_time": null, "diff_seconds": 1.0})"),
               Error);
  const auto r = report_from_json(R"({"session_id": "s", "status": "not_detected",
      "detected_time": null, "annotation_time": 4.0, "diff_seconds": null})");
  EXPECT_EQ(r.status, DetectionStatus::not_detected);
  EXPECT_FALSE(r.abs_diff_seconds());
}

}  // namespace
}  // namespace cookstate
