// Copyright 2026 The vrb Authors
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

#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <random>

#include <json.hpp>

#include "helpers.hpp"
#include "vrb/dataset.hpp"
#include "vrb/error.hpp"
#include "vrb/grid.hpp"
#include "vrb/imageio.hpp"

using namespace vrb;
using nlohmann::json;

namespace {

void write_text(const std::string& path, const std::string& text) {
  atomic_write_file(path, text);
}

json question(int64_t qid, int64_t image, const std::string& text) {
  return json{{"question_id", qid}, {"image_id", image}, {"question", text}};
}

json annotation(int64_t qid, const std::vector<std::string>& answers,
                const std::string& mca = "") {
  json ans = json::array();
  int id = 1;
  for (const std::string& a : answers) {
    ans.push_back({{"answer", a}, {"answer_id", id++}, {"answer_confidence", "yes"}});
  }
  json j{{"question_id", qid}, {"answers", ans}};
  if (!mca.empty()) j["multiple_choice_answer"] = mca;
  return j;
}

// A small 3-question dataset written to disk, plus helpers to emit
// prediction files.
struct Fixture {
  vrbtest::TempDir tmp{"dataset"};
  std::vector<QARecord> dataset;

  Fixture() {
    json qs{{"questions",
             {question(11, 101, "What color is the sky?"),
              question(7, 102, "How many dogs?"),
              question(23, 103, "Is it raining?")}}};
    json as{{"annotations",
             {annotation(11, {"blue", "blue", "blue", "Blue", "gray", "blue",
                              "blue", "blue", "blue", "blue"}, "blue"),
              annotation(7, {"two", "2", "two", "2", "two", "two", "2", "two",
                             "two", "3"}, "2"),
              annotation(23, {"no", "no", "no", "no", "no", "no", "no", "no",
                              "no", "yes"}, "no")}}};
    write_text(path("questions.json"), qs.dump());
    write_text(path("annotations.json"), as.dump());
    dataset = join_dataset(load_questions(path("questions.json")),
                           load_annotations(path("annotations.json")));
  }

  std::string path(const std::string& name) const {
    return (tmp.path() / name).string();
  }

  std::string predictions_file(const std::string& name,
                               const std::vector<std::pair<int64_t, std::string>>&
                               entries) const {
    json arr = json::array();
    for (const auto& [qid, answer] : entries) {
      arr.push_back({{"question_id", qid}, {"answer", answer}});
    }
    const std::string p = path(name);
    write_text(p, arr.dump());
    return p;
  }
};

}  // namespace

TEST_CASE("load questions") {
  Fixture fx;
  const auto questions = load_questions(fx.path("questions.json"));
  CHECK(questions.size() == 3);
  CHECK(questions[0].question_id == 11);
  CHECK(questions[0].image_id == 101);
  CHECK(questions[0].question == "What color is the sky?");
}

TEST_CASE("duplicate question ids are rejected by id") {
  Fixture fx;
  json qs{{"questions", {question(5, 1, "a?"), question(5, 2, "b?")}}};
  write_text(fx.path("dup.json"), qs.dump());
  CHECK_THROWS_WITH_AS(load_questions(fx.path("dup.json")),
                       doctest::Contains("question_id 5"), Error);
}

TEST_CASE("empty question array yields an empty stream") {
  Fixture fx;
  write_text(fx.path("empty.json"), R"({"questions": []})");
  CHECK(load_questions(fx.path("empty.json")).empty());
}

TEST_CASE("malformed records are reported with their index") {
  Fixture fx;
  write_text(fx.path("bad.json"),
             R"({"questions": [{"question_id": 1, "image_id": 2,
                 "question": "ok?"}, {"image_id": 3}]})");
  CHECK_THROWS_WITH_AS(load_questions(fx.path("bad.json")),
                       doctest::Contains("index 1"), Error);
  write_text(fx.path("noarray.json"), R"({"foo": 1})");
  CHECK_THROWS_AS(load_questions(fx.path("noarray.json")), Error);
  write_text(fx.path("syntax.json"), "{nope");
  CHECK_THROWS_AS(load_questions(fx.path("syntax.json")), Error);
}

TEST_CASE("annotations load verbatim") {
  Fixture fx;
  const auto annotations = load_annotations(fx.path("annotations.json"));
  CHECK(annotations.size() == 3);
  const AnnotationEntry& sky = annotations.at(11);
  CHECK(sky.answers.size() == 10);
  CHECK(sky.answers[3] == "Blue");  // case preserved; normalization is later
  CHECK(sky.ground_truth == "blue");
}

TEST_CASE("annotation with no answers is rejected") {
  Fixture fx;
  json as{{"annotations", {json{{"question_id", 9}, {"answers", json::array()}}}}};
  write_text(fx.path("noans.json"), as.dump());
  CHECK_THROWS_WITH_AS(load_annotations(fx.path("noans.json")),
                       doctest::Contains("no answers"), Error);
}

TEST_CASE("join_dataset pairs questions with annotations") {
  Fixture fx;
  CHECK(fx.dataset.size() == 3);
  // sorted by question id
  CHECK(fx.dataset[0].question_id == 7);
  CHECK(fx.dataset[1].question_id == 11);
  CHECK(fx.dataset[2].question_id == 23);
  CHECK(fx.dataset[0].human_answers.size() == 10);

  // missing annotation
  json qs{{"questions", {question(1, 1, "a?"), question(2, 1, "b?")}}};
  json as{{"annotations", {annotation(1, {"x"})}}};
  write_text(fx.path("q2.json"), qs.dump());
  write_text(fx.path("a2.json"), as.dump());
  CHECK_THROWS_WITH_AS(join_dataset(load_questions(fx.path("q2.json")),
                                    load_annotations(fx.path("a2.json"))),
                       doctest::Contains("no annotations"), Error);

  // orphan annotation
  json as3{{"annotations", {annotation(1, {"x"}), annotation(9, {"y"})}}};
  write_text(fx.path("a3.json"), as3.dump());
  json qs3{{"questions", {question(1, 1, "a?")}}};
  write_text(fx.path("q3.json"), qs3.dump());
  CHECK_THROWS_WITH_AS(join_dataset(load_questions(fx.path("q3.json")),
                                    load_annotations(fx.path("a3.json"))),
                       doctest::Contains("no matching question"), Error);
}

TEST_CASE("prediction loading validates coverage") {
  Fixture fx;
  const std::string ok = fx.predictions_file(
      "ok.json", {{11, "blue"}, {7, "2"}, {23, "no"}});
  const PredictionSet set = load_predictions(ok, "m", "clean", 0, fx.dataset);
  CHECK(set.answers.size() == 3);

  const std::string missing =
      fx.predictions_file("missing.json", {{11, "blue"}, {7, "2"}});
  CHECK_THROWS_WITH_AS(load_predictions(missing, "m", "clean", 0, fx.dataset),
                       doctest::Contains("23"), Error);

  const std::string dup = fx.predictions_file(
      "dup.json", {{11, "blue"}, {11, "red"}, {7, "2"}, {23, "no"}});
  CHECK_THROWS_WITH_AS(load_predictions(dup, "m", "clean", 0, fx.dataset),
                       doctest::Contains("duplicate"), Error);

  const std::string extra = fx.predictions_file(
      "extra.json", {{11, "blue"}, {7, "2"}, {23, "no"}, {99, "?"}});
  CHECK_THROWS_WITH_AS(load_predictions(extra, "m", "clean", 0, fx.dataset),
                       doctest::Contains("unknown question ids"), Error);
}

namespace {

// one model, one corruption, six levels; every prediction correct
std::vector<PredictionSet> full_sets(const Fixture& fx) {
  std::vector<PredictionSet> sets;
  auto file = [&](const std::string& name) {
    return fx.predictions_file(name, {{11, "blue"}, {7, "2"}, {23, "no"}});
  };
  sets.push_back(load_predictions(file("clean.json"), "m", "clean", 0, fx.dataset));
  for (int level = 1; level <= 5; ++level) {
    sets.push_back(load_predictions(file("g" + std::to_string(level) + ".json"),
                                    "m", "gaussian_noise", level, fx.dataset));
  }
  return sets;
}

}  // namespace

TEST_CASE("join yields six levels of full tuples per corruption") {
  Fixture fx;
  const auto cells = join_predictions(fx.dataset, full_sets(fx));
  CHECK(cells.size() == 6);
  std::size_t tuples = 0;
  for (const JoinedCell& cell : cells) tuples += cell.rows.size();
  CHECK(tuples == 6 * fx.dataset.size());
}

TEST_CASE("missing level is a named coverage error") {
  Fixture fx;
  auto sets = full_sets(fx);
  sets.erase(sets.begin() + 3);  // drop level 3
  CHECK_THROWS_WITH_AS(join_predictions(fx.dataset, sets),
                       doctest::Contains("m/gaussian_noise/3"), Error);
}

TEST_CASE("clean predictions populate level 0 of every corruption") {
  Fixture fx;
  auto sets = full_sets(fx);
  // add a second corruption reusing the same files
  for (int level = 1; level <= 5; ++level) {
    const std::string name = "s" + std::to_string(level) + ".json";
    sets.push_back(load_predictions(
        fx.predictions_file(name, {{11, "blue"}, {7, "2"}, {23, "no"}}), "m",
        "snow", level, fx.dataset));
  }
  const auto cells = join_predictions(fx.dataset, sets);
  const EvaluationGrid grid = build_grid(cells);
  const int v = grid.model_index("m");
  REQUIRE(v == 0);
  const int c1 = grid.corruption_index("gaussian_noise");
  const int c2 = grid.corruption_index("snow");
  CHECK(grid.accuracy(v, c1, 0) == grid.accuracy(v, c2, 0));
}

TEST_CASE("missing clean set is an error") {
  Fixture fx;
  auto sets = full_sets(fx);
  sets.erase(sets.begin());
  CHECK_THROWS_WITH_AS(join_predictions(fx.dataset, sets),
                       doctest::Contains("clean"), Error);
}

TEST_CASE("grid cell accuracy is the mean per-question accuracy") {
  Fixture fx;
  // q7: "2" matches normalize("two")x6 + "2"x3 + ... all 10 map to 2 or 3;
  // choose predictions that hit known match counts instead: sky question
  // answered "gray" matches exactly 1 of 10 -> 1/3. dogs answered "2"
  // matches 9 (saturates to 1). rain answered "maybe" matches 0.
  auto file = [&](const std::string& name) {
    return fx.predictions_file(name,
                               {{11, "gray"}, {7, "2"}, {23, "maybe"}});
  };
  std::vector<PredictionSet> sets;
  sets.push_back(load_predictions(file("c.json"), "m", "clean", 0, fx.dataset));
  for (int level = 1; level <= 5; ++level) {
    sets.push_back(load_predictions(file("x" + std::to_string(level) + ".json"),
                                    "m", "snow", level, fx.dataset));
  }
  const EvaluationGrid grid = build_grid(join_predictions(fx.dataset, sets));
  // mean of {1/3, 1, 0}
  const double expected = (1.0 / 3.0 + 1.0 + 0.0) / 3.0;
  CHECK(grid.accuracy(0, 0, 0) == doctest::Approx(expected));
  CHECK(grid.error(0, 0, 0) == doctest::Approx(1.0 - expected));

  // without normalization, "2" no longer matches the word "two"
  const EvaluationGrid raw = build_grid(join_predictions(fx.dataset, sets),
                                        /*normalize=*/false);
  CHECK(raw.accuracy(0, 0, 0) == doctest::Approx((1.0 / 3.0 + 1.0 + 0.0) / 3.0));
}

TEST_CASE("loading is insensitive to input order") {
  Fixture fx;
  // shuffle the question array; the joined dataset is keyed by id
  json qs{{"questions",
           {question(23, 103, "Is it raining?"),
            question(11, 101, "What color is the sky?"),
            question(7, 102, "How many dogs?")}}};
  write_text(fx.path("shuffled.json"), qs.dump());
  const auto shuffled = join_dataset(load_questions(fx.path("shuffled.json")),
                                     load_annotations(fx.path("annotations.json")));
  REQUIRE(shuffled.size() == fx.dataset.size());
  for (std::size_t i = 0; i < shuffled.size(); ++i) {
    CHECK(shuffled[i].question_id == fx.dataset[i].question_id);
    CHECK(shuffled[i].human_answers == fx.dataset[i].human_answers);
  }
}

TEST_CASE("grid csv round trip") {
  Fixture fx;
  const EvaluationGrid grid = build_grid(join_predictions(fx.dataset, full_sets(fx)));
  vrbtest::TempDir tmp("grid");
  const std::string path = (tmp.path() / "grid.csv").string();
  grid.write_csv(path);
  const EvaluationGrid back = EvaluationGrid::read_csv(path);
  CHECK(back.models() == grid.models());
  CHECK(back.corruptions() == grid.corruptions());
  for (int l = 0; l < EvaluationGrid::kLevels; ++l) {
    CHECK(back.accuracy(0, 0, l) == grid.accuracy(0, 0, l));
  }
}

TEST_CASE("grid csv validation") {
  vrbtest::TempDir tmp("gridcsv");
  auto path = [&](const std::string& n) { return (tmp.path() / n).string(); };

  write_text(path("header.csv"), "wrong,header\n");
  CHECK_THROWS_WITH_AS(EvaluationGrid::read_csv(path("header.csv")),
                       doctest::Contains("header"), Error);

  write_text(path("incomplete.csv"),
             "model,corruption,level,accuracy,error\nm,c,0,0.5,0.5\n");
  CHECK_THROWS_WITH_AS(EvaluationGrid::read_csv(path("incomplete.csv")),
                       doctest::Contains("missing cell"), Error);

  write_text(path("baderr.csv"),
             "model,corruption,level,accuracy,error\nm,c,0,0.5,0.4\n");
  CHECK_THROWS_WITH_AS(EvaluationGrid::read_csv(path("baderr.csv")),
                       doctest::Contains("1 - accuracy"), Error);

  std::string dup = "model,corruption,level,accuracy,error\n";
  for (int l = 0; l < 6; ++l) {
    dup += "m,c," + std::to_string(l) + ",0.5,0.5\n";
  }
  dup += "m,c,0,0.5,0.5\n";
  write_text(path("dup.csv"), dup);
  CHECK_THROWS_WITH_AS(EvaluationGrid::read_csv(path("dup.csv")),
                       doctest::Contains("duplicate"), Error);

  // inconsistent clean accuracy across corruptions
  std::string inconsistent = "model,corruption,level,accuracy,error\n";
  for (const std::string c : {"a", "b"}) {
    for (int l = 0; l < 6; ++l) {
      const double acc = (c == "a" || l > 0) ? 0.5 : 0.6;
      inconsistent += "m," + c + "," + std::to_string(l) + "," +
                      std::to_string(acc) + "," + std::to_string(1 - acc) + "\n";
    }
  }
  write_text(path("inconsistent.csv"), inconsistent);
  CHECK_THROWS_WITH_AS(EvaluationGrid::read_csv(path("inconsistent.csv")),
                       doctest::Contains("clean accuracy"), Error);
}

TEST_CASE("cells covering different question sets are rejected") {
  Fixture fx;
  auto sets = full_sets(fx);
  auto cells = join_predictions(fx.dataset, sets);
  cells[2].rows.pop_back();  // tamper with one cell's coverage
  CHECK_THROWS_WITH_AS(build_grid(cells),
                       doctest::Contains("different question set"), Error);
}
