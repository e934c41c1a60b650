#include "faultsim/similarity.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "faultsim/errors.hpp"
#include "oracles/similarity_oracle.hpp"
#include "test_support.hpp"

using namespace faultsim;

namespace {

const CorpusIndex& fixture() {
  static const CorpusIndex index = build_index(load_fault_db(test::fixture_table()),
                                               {default_stop_list(), default_stem_table()});
  return index;
}

CorpusIndex raw_index(const std::map<FaultId, TermCounts>& docs) {
  return CorpusIndex(docs, PipelineConfig{}, IndexOptions{});
}

TermVector random_vector(std::mt19937_64& rng, const std::vector<std::string>& terms) {
  TermVector v;
  std::uniform_real_distribution<double> w(0.0, 5.0);
  for (const auto& t : terms) {
    if (rng() % 2) v.set(t, w(rng));
  }
  return v;
}

const std::vector<std::string> kTerms{"radio", "hu", "message", "sds", "audio", "dvd"};

}  // namespace

TEST(TermWeight, TermInEveryEntryWeighsZero) {
  EXPECT_EQ(term_weight(3, 3, 14, 14, {}), 0.0);
}

TEST(TermWeight, HandEvaluatedValues) {
  EXPECT_NEAR(term_weight(2, 4, 100, 10, {}), 0.75 * std::log(10.0), 1e-12);
  EXPECT_NEAR(term_weight(2, 4, 100, 10, {}), 1.72694, 1e-5);
  WeightConfig base2;
  base2.log_base = 2.0;
  EXPECT_NEAR(term_weight(1, 1, 8, 4, base2), 1.0, 1e-12);
  WeightConfig base10;
  base10.log_base = 10.0;
  EXPECT_NEAR(term_weight(1, 1, 100, 10, base10), 1.0, 1e-12);
}

TEST(TermWeight, DomainErrors) {
  EXPECT_THROW(term_weight(1, 1, 10, 0, {}), DomainError);
  EXPECT_THROW(term_weight(1, 0, 10, 1, {}), DomainError);
  EXPECT_THROW(term_weight(0, 1, 10, 1, {}), DomainError);
  EXPECT_THROW(term_weight(1, 1, 10, 11, {}), DomainError);
  EXPECT_THROW(term_weight(3, 2, 10, 1, {}), DomainError);
  WeightConfig literal;
  literal.max_tf_mode = MaxTfMode::kLiteral;
  EXPECT_NEAR(term_weight(3, 2, 10, 1, literal), 1.25 * std::log(10.0), 1e-12);
}

TEST(Vectorize, UbiquitousTermsGiveZeroVector) {
  const CorpusIndex index = raw_index({{1, {{"radio", 1}}}, {2, {{"radio", 2}}}});
  EXPECT_TRUE(vectorize({{"radio", 5}}, index, {}).empty());
}

TEST(Vectorize, SingleTermHasOneCoordinate) {
  for (std::size_t k = 1; k <= 4; ++k) {
    const TermVector v = vectorize({{"hu", k}}, fixture(), {});
    ASSERT_EQ(v.size(), 1u);
    EXPECT_GT(v.get("hu"), 0.0);
  }
}

TEST(Vectorize, FixtureDocument49) {
  std::size_t n_radio = 0, n_hu = 0;
  for (const auto& [id, counts] : fixture().docs()) {
    n_radio += counts.count("radio");
    n_hu += counts.count("hu");
  }
  EXPECT_EQ(n_radio, 12u);
  EXPECT_EQ(n_hu, 9u);
  const TermVector v = vectorize(fixture().document_tokens(49), fixture(), {});
  EXPECT_NEAR(v.get("radio"), std::log(14.0 / double(n_radio)), 1e-12);
  EXPECT_NEAR(v.get("hu"), std::log(14.0 / double(n_hu)), 1e-12);
}

TEST(Vectorize, UnseenTermsCarryNoWeight) {
  const TermVector v = vectorize({{"radio", 1}, {"dvd", 1}}, fixture(), {});
  EXPECT_EQ(v.get("dvd"), 0.0);
  EXPECT_EQ(v.size(), 1u);
  EXPECT_TRUE(vectorize({}, fixture(), {}).empty());
}

TEST(Vectorize, LiteralModeUsesDocFreqOfMostFrequentTerm) {
  // message occurs twice in the text and in 3 of 4 entries: max_tf = 3.
  const CorpusIndex index = raw_index({{1, {{"message", 1}, {"hu", 1}}},
                                       {2, {{"message", 1}}},
                                       {3, {{"message", 2}}},
                                       {4, {{"radio", 1}}}});
  WeightConfig literal;
  literal.max_tf_mode = MaxTfMode::kLiteral;
  const TermVector v = vectorize({{"message", 2}, {"hu", 1}}, index, literal);
  EXPECT_NEAR(v.get("message"), 0.5 * (1 + 2.0 / 3.0) * std::log(4.0 / 3.0), 1e-12);
  EXPECT_NEAR(v.get("hu"), 0.5 * (1 + 1.0 / 3.0) * std::log(4.0), 1e-12);
}

TEST(Cosine, Examples) {
  const TermVector v({{"radio", 0.3}, {"hu", 2.0}});
  EXPECT_NEAR(cosine(v, v, {}), 1.0, 1e-12);
  EXPECT_EQ(cosine(TermVector({{"a", 1.0}}), TermVector({{"b", 1.0}}), {}), 0.0);
  EXPECT_NEAR(cosine(TermVector({{"x", 1.0}, {"y", 1.0}}), TermVector({{"x", 1.0}}), {}),
              1.0 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(1.0 / std::sqrt(2.0), 0.70711, 1e-5);
}

TEST(Cosine, ZeroNormIsZero) {
  EXPECT_EQ(cosine(TermVector{}, TermVector{}, {}), 0.0);
  EXPECT_EQ(cosine(TermVector{}, TermVector({{"a", 1.0}}), {}), 0.0);
}

TEST(Cosine, AlphaScalesCoordinates) {
  WeightConfig cfg;
  cfg.alpha = {{"x", 3.0}};
  const TermVector a({{"x", 1.0}, {"y", 2.0}});
  const TermVector b({{"x", 2.0}, {"y", 1.0}});
  const TermVector a3({{"x", 3.0}, {"y", 2.0}});
  const TermVector b3({{"x", 6.0}, {"y", 1.0}});
  EXPECT_NEAR(cosine(a, b, cfg), cosine(a3, b3, {}), 1e-12);
  EXPECT_NEAR(cosine(a, a, cfg), 1.0, 1e-12);
}

TEST(Cosine, Properties) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> scale(1e-3, 1e3);
  for (int trial = 0; trial < 2000; ++trial) {
    const TermVector a = random_vector(rng, kTerms);
    const TermVector b = random_vector(rng, kTerms);
    const double ab = cosine(a, b, {});
    EXPECT_DOUBLE_EQ(ab, cosine(b, a, {}));
    EXPECT_GE(ab, 0.0);
    EXPECT_LE(ab, 1.0);
    TermVector ca;
    const double c = scale(rng);
    for (const auto& [t, w] : a.weights()) ca.set(t, c * w);
    EXPECT_NEAR(cosine(ca, b, {}), ab, 1e-12);
    if (!a.empty()) {
      EXPECT_NEAR(cosine(a, a, {}), 1.0, 1e-12);
    }
  }
}

TEST(RankQuery, RadioHu) {
  const auto r = rank_query("radio hu", fixture(), {}, 10);
  ASSERT_GE(r.size(), 2u);
  EXPECT_EQ(r[0].id, 49);
  EXPECT_NEAR(r[0].score, 1.0, 1e-9);
  EXPECT_EQ(r[1].id, 40);
}

TEST(RankQuery, ScaleInvarianceTiesBreakByAscendingId) {
  const auto r = rank_query("radio dvd", fixture(), {}, 14);
  std::map<FaultId, double> score;
  std::vector<FaultId> order;
  for (const auto& x : r) {
    score[x.id] = x.score;
    order.push_back(x.id);
  }
  EXPECT_NEAR(score[50], score[51], 1e-12);
  EXPECT_NEAR(score[51], score[52], 1e-12);
  const auto pos = [&](FaultId id) { return std::find(order.begin(), order.end(), id) - order.begin(); };
  EXPECT_LT(pos(50), pos(51));
  EXPECT_LT(pos(51), pos(52));
}

TEST(RankQuery, TotalOrderAndTruncation) {
  const auto all = rank_query("radio hu message", fixture(), {}, 100);
  EXPECT_EQ(all.size(), 14u);
  for (std::size_t i = 1; i < all.size(); ++i) {
    EXPECT_TRUE(all[i - 1].score > all[i].score ||
                (all[i - 1].score == all[i].score && all[i - 1].id < all[i].id));
  }
  const auto top3 = rank_query("radio hu message", fixture(), {}, 3);
  ASSERT_EQ(top3.size(), 3u);
  EXPECT_TRUE(std::equal(top3.begin(), top3.end(), all.begin()));
  EXPECT_EQ(rank_query("radio hu message", fixture(), {}, 100), all);
}

TEST(RankQuery, InformationFreeQueries) {
  EXPECT_TRUE(rank_query("", fixture(), {}, 5).empty());
  EXPECT_TRUE(rank_query("the preconditions -> will", fixture(), {}, 5).empty());
  EXPECT_TRUE(rank_query("zzz qqq", fixture(), {}, 5).empty());
  EXPECT_THROW(rank_query("radio", fixture(), {}, 0), DomainError);
}

TEST(RankQuery, SelfSimilarityForEveryDocument) {
  for (const auto& [id, counts] : fixture().docs()) {
    if (vectorize(counts, fixture(), {}).empty()) continue;
    std::string text;
    for (const auto& [term, tf] : counts) {
      for (std::size_t i = 0; i < tf; ++i) text += term + " ";
    }
    bool found = false;
    for (const auto& r : rank_query(text, fixture(), {}, 14)) {
      if (r.id == id) {
        EXPECT_NEAR(r.score, 1.0, 1e-9) << id;
        found = true;
      }
    }
    EXPECT_TRUE(found);
  }
}

TEST(RankQuery, LogBaseDoesNotChangeScores) {
  for (const char* q : {"radio hu", "radio hu message", "radio dvd message", "sds audio"}) {
    const auto e = rank_query(q, fixture(), {}, 14);
    for (double base : {2.0, 10.0, 1.5}) {
      WeightConfig cfg;
      cfg.log_base = base;
      const auto other = rank_query(q, fixture(), cfg, 14);
      ASSERT_EQ(other.size(), e.size());
      for (std::size_t i = 0; i < e.size(); ++i) {
        EXPECT_EQ(other[i].id, e[i].id) << q;
        EXPECT_NEAR(other[i].score, e[i].score, 1e-12) << q;
      }
    }
  }
}

TEST(RankQuery, MatchesDenseOracleOnFixture) {
  const std::vector<std::string> vocab = fixture().vocabulary();
  oracle::DenseCounts corpus;
  std::vector<FaultId> ids;
  for (const auto& [id, counts] : fixture().docs()) {
    std::vector<int> row(vocab.size(), 0);
    for (std::size_t i = 0; i < vocab.size(); ++i) {
      auto it = counts.find(vocab[i]);
      if (it != counts.end()) row[i] = static_cast<int>(it->second);
    }
    corpus.push_back(row);
    ids.push_back(id);
  }
  const std::vector<double> ones(vocab.size(), 1.0);
  for (const char* q : {"radio hu", "radio hu message", "radio message", "hu sds"}) {
    std::vector<int> qrow(vocab.size(), 0);
    for (const auto& [term, tf] : fixture().count_terms(q)) {
      auto it = std::find(vocab.begin(), vocab.end(), term);
      qrow[static_cast<std::size_t>(it - vocab.begin())] = static_cast<int>(tf);
    }
    const auto qw = oracle::dense_weights(qrow, corpus);
    for (const auto& r : rank_query(q, fixture(), {}, 14)) {
      const auto d = static_cast<std::size_t>(std::find(ids.begin(), ids.end(), r.id) - ids.begin());
      EXPECT_NEAR(r.score, oracle::dense_cosine(qw, oracle::dense_weights(corpus[d], corpus), ones),
                  1e-12)
          << q << " id " << r.id;
    }
  }
}

TEST(RankQuery, MatchesDenseOracleOnRandomSmallCorpora) {
  std::mt19937_64 rng(2024);
  const std::vector<std::string> terms{"t0", "t1", "t2", "t3"};
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n_docs = 1 + rng() % 5;
    oracle::DenseCounts corpus(n_docs, std::vector<int>(4, 0));
    std::map<FaultId, TermCounts> docs;
    for (std::size_t d = 0; d < n_docs; ++d) {
      for (std::size_t t = 0; t < 4; ++t) {
        corpus[d][t] = static_cast<int>(rng() % 4);
        if (corpus[d][t] > 0) docs[FaultId(d)][terms[t]] = std::size_t(corpus[d][t]);
      }
      docs.try_emplace(FaultId(d));
    }
    const CorpusIndex index = raw_index(docs);
    std::vector<int> q(4);
    TermCounts qc;
    for (std::size_t t = 0; t < 4; ++t) {
      q[t] = static_cast<int>(rng() % 3);
      if (q[t] > 0) qc[terms[t]] = std::size_t(q[t]);
    }
    WeightConfig cfg;
    std::vector<double> alpha(4, 1.0);
    if (trial % 2) {
      for (std::size_t t = 0; t < 4; ++t) {
        alpha[t] = 0.5 + double(rng() % 4);
        cfg.alpha[terms[t]] = alpha[t];
      }
    }
    const TermVector qv = vectorize(qc, index, cfg);
    const auto qw = oracle::dense_weights(q, corpus);
    for (std::size_t d = 0; d < n_docs; ++d) {
      const TermVector dv = vectorize(docs.at(FaultId(d)), index, cfg);
      const auto dw = oracle::dense_weights(corpus[d], corpus);
      for (std::size_t t = 0; t < 4; ++t) EXPECT_NEAR(dv.get(terms[t]), dw[t], 1e-12);
      EXPECT_NEAR(cosine(qv, dv, cfg), oracle::dense_cosine(qw, dw, alpha), 1e-12);
    }
  }
}

TEST(WeightConfigFile, Parses) {
  const WeightConfig cfg = parse_weight_config(
      "# weights\nlog_base = 10\nmax_tf_mode = literal\n[alpha]\nradio = 0.5  # damp radio\nhu=2\n");
  EXPECT_EQ(cfg.log_base, 10.0);
  EXPECT_EQ(cfg.max_tf_mode, MaxTfMode::kLiteral);
  EXPECT_EQ(cfg.alpha_for("radio"), 0.5);
  EXPECT_EQ(cfg.alpha_for("hu"), 2.0);
  EXPECT_EQ(cfg.alpha_for("message"), 1.0);
}

TEST(WeightConfigFile, Errors) {
  EXPECT_THROW(parse_weight_config("log_base = 1\n"), ParseError);
  EXPECT_THROW(parse_weight_config("[alpha]\nradio = 0\n"), ParseError);
  EXPECT_THROW(parse_weight_config("[alpha]\nradio = -1\n"), ParseError);
  EXPECT_THROW(parse_weight_config("max_tf_mode = sometimes\n"), ParseError);
  EXPECT_THROW(parse_weight_config("colour = blue\n"), ParseError);
  EXPECT_THROW(parse_weight_config("[beta]\n"), ParseError);
  EXPECT_THROW(parse_weight_config("log_base\n"), ParseError);
}

TEST(TermVectorType, RejectsNegativeWeights) {
  TermVector v;
  EXPECT_THROW(v.set("a", -1.0), DomainError);
  EXPECT_THROW(v.set("a", std::nan("")), DomainError);
  v.set("a", 1.0);
  v.set("a", 0.0);
  EXPECT_TRUE(v.empty());
}
