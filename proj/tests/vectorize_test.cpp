#include "hitratio/vectorize.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "hitratio/error.hpp"
#include "support/synthetic.hpp"

namespace hitratio {
namespace {

CleanTweet tweet(std::vector<std::string> tokens) {
  CleanTweet t;
  t.id = "t";
  for (const auto& tok : tokens) {
    if (tok.starts_with('#')) t.hashtags.insert(tok.substr(1));
  }
  t.tokens = std::move(tokens);
  return t;
}

std::vector<double> values(const TweetVector& v) { return {v.values().begin(), v.values().end()}; }

TEST(TfIdf, SmoothedIdfByHand) {
  const std::vector<CleanTweet> corpus = {tweet({"cat", "dog", "#pets"}), tweet({"cat", "fish"})};
  const auto model = fit_tfidf(corpus);
  EXPECT_EQ(model.document_count(), 2u);
  EXPECT_EQ(model.dimension(), 3u);  // hashtags excluded
  EXPECT_DOUBLE_EQ(model.idf("cat"), 1.0);                       // ln(3/3) + 1
  EXPECT_NEAR(model.idf("dog"), std::log(1.5) + 1.0, 1e-15);    // ln(3/2) + 1
  EXPECT_NEAR(model.idf("dog"), 1.405, 5e-4);
  EXPECT_EQ(model.idf("#pets"), 0.0);
  for (double w : model.idf()) EXPECT_GE(w, 0.0);

  const std::vector<CleanTweet> single = {tweet({"a", "b"})};
  const auto single_model = fit_tfidf(single);
  for (double w : single_model.idf()) EXPECT_DOUBLE_EQ(w, 1.0);

  EXPECT_THROW(fit_tfidf(std::span<const CleanTweet>{}), EmptyResultError);
}

TEST(TfIdf, IncludeHashtagsSwitch) {
  const std::vector<CleanTweet> corpus = {tweet({"cat", "#pets"})};
  EXPECT_EQ(fit_tfidf(corpus, {.include_hashtags = true}).dimension(), 2u);
}

TEST(TfIdf, Vectors) {
  const std::vector<CleanTweet> corpus = {tweet({"cat", "dog"}), tweet({"cat", "fish"})};
  const auto model = fit_tfidf(corpus);

  const auto oov = tfidf_vector(model, tweet({"zebra", "#cat"}));
  EXPECT_TRUE(oov.is_zero());
  EXPECT_EQ(oov.dimension(), model.dimension());

  const auto dog = tfidf_vector(model, tweet({"dog"}));
  const auto col = model.vocabulary().at("dog");
  for (std::size_t i = 0; i < dog.dimension(); ++i) {
    EXPECT_DOUBLE_EQ(dog.values()[i], i == col ? std::log(1.5) + 1.0 : 0.0);
  }

  const std::vector<CleanTweet> uniform = {tweet({"x", "y", "z"})};
  const auto ones = tfidf_vector(fit_tfidf(uniform), tweet({"x", "y", "z"}));
  EXPECT_EQ(values(ones), (std::vector<double>{1.0, 1.0, 1.0}));
}

TEST(TfIdf, SelfConcatenationDoubles) {
  auto corpus = testing::make_synthetic_corpus(3, {.tweets = 60});
  std::vector<CleanTweet> clean;
  for (const auto& r : corpus.tweets) clean.push_back(normalize(r, StopwordList::english()));
  const auto model = fit_tfidf(clean);
  for (const auto& t : clean) {
    auto doubled = t;
    doubled.tokens.insert(doubled.tokens.end(), t.tokens.begin(), t.tokens.end());
    const auto a = tfidf_vector(model, t);
    const auto b = tfidf_vector(model, doubled);
    for (std::size_t i = 0; i < a.dimension(); ++i) ASSERT_EQ(b.values()[i], 2.0 * a.values()[i]);
  }
}

TEST(TweetVector, CachesNorm) {
  const TweetVector v({3.0, 4.0});
  EXPECT_DOUBLE_EQ(v.norm(), 5.0);
  EXPECT_TRUE(TweetVector(std::vector<double>{0.0, 0.0}).is_zero());
}

TEST(Cosine, HandValues) {
  const TweetVector a({1.0, 2.0, 3.0});
  EXPECT_NEAR(cosine(a, a), 1.0, 1e-12);
  EXPECT_EQ(cosine(TweetVector({1.0, 0.0}), TweetVector({0.0, 1.0})), 0.0);
  EXPECT_NEAR(cosine(TweetVector({1.0, 1.0}), TweetVector({1.0, 0.0})), 0.7071, 1e-4);
  EXPECT_EQ(cosine(TweetVector({0.0, 0.0}), TweetVector({1.0, 0.0})), 0.0);
  EXPECT_THROW(cosine(TweetVector({1.0}), TweetVector({1.0, 0.0})), DimensionMismatch);
}

TEST(Cosine, SymmetricScaleInvariantBounded) {
  testing::SplitMix rng(17);
  for (int i = 0; i < 500; ++i) {
    std::vector<double> x(6), y(6), xs(6);
    const double alpha = 0.01 + rng.unit() * 100.0;
    for (std::size_t j = 0; j < 6; ++j) {
      x[j] = rng.unit() * 2 - 1;
      y[j] = rng.unit() * 2 - 1;
      xs[j] = alpha * x[j];
    }
    const TweetVector a(x), b(y), as(xs);
    const double c = cosine(a, b);
    ASSERT_EQ(c, cosine(b, a));
    ASSERT_NEAR(c, cosine(as, b), 1e-12);
    ASSERT_GE(c, -1.0);
    ASSERT_LE(c, 1.0);
  }
}

TEST(Cosine, NonNegativeForTfIdf) {
  auto corpus = testing::make_synthetic_corpus(4, {.tweets = 80});
  std::vector<CleanTweet> clean;
  for (const auto& r : corpus.tweets) clean.push_back(normalize(r, StopwordList::english()));
  const auto model = fit_tfidf(clean);
  for (std::size_t i = 0; i + 1 < clean.size(); ++i) {
    const double c = cosine(model.vectorize(clean[i]), model.vectorize(clean[i + 1]));
    ASSERT_GE(c, 0.0);
    ASSERT_LE(c, 1.0);
  }
}

TEST(LoadEmbeddings, RoundTrip) {
  std::istringstream in("2 3\ncat 1 0 0\ndog 0 1 0 \n");
  const auto table = load_embeddings(in);
  EXPECT_EQ(table.size(), 2u);
  EXPECT_EQ(table.dimension(), 3u);
  const float* dog = table.find("dog");
  ASSERT_NE(dog, nullptr);
  EXPECT_EQ(dog[1], 1.0f);
  EXPECT_EQ(table.find("bird"), nullptr);
}

TEST(LoadEmbeddings, ErrorsNameTheLine) {
  auto fails_at = [](const std::string& text, std::size_t line) {
    std::istringstream in(text);
    try {
      load_embeddings(in, "vec.txt");
      ADD_FAILURE() << "no error for: " << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), line) << e.what();
      if (line) EXPECT_NE(std::string(e.what()).find("vec.txt:" + std::to_string(line)),
                          std::string::npos);
    }
  };
  fails_at("2 3\ncat 1 0 0\ndog 0 1\n", 3);
  fails_at("1 2\ncat 1 x\n", 2);
  fails_at("1 2\ncat 1 nan\n", 2);
  fails_at("three 2\n", 1);
  fails_at("2 0\n", 1);
  fails_at("", 0);
  fails_at("3 2\na 1 1\n", 2);  // fewer rows than declared
}

TEST(LoadEmbeddings, WrittenVectorsReloadExactly) {
  const auto corpus = testing::make_synthetic_corpus(8);
  std::stringstream buf;
  testing::write_word_vectors(buf, corpus.vectors, corpus.dimension);
  const auto table = load_embeddings(buf);
  ASSERT_EQ(table.size(), corpus.vectors.size());
  for (const auto& [word, vec] : corpus.vectors) {
    const float* v = table.find(word);
    ASSERT_NE(v, nullptr);
    for (std::size_t i = 0; i < vec.size(); ++i) ASSERT_EQ(v[i], vec[i]);
  }
}

TEST(Mowe, MeanOfKnownWords) {
  EmbeddingTable table(3);
  const float cat[] = {1, 0, 0};
  const float dog[] = {0, 1, 0};
  table.add("cat", cat);
  table.add("dog", dog);
  EXPECT_FALSE(table.add("cat", dog));

  EXPECT_EQ(values(mowe_vector(table, tweet({"cat", "dog"}))),
            (std::vector<double>{0.5, 0.5, 0.0}));
  EXPECT_EQ(values(mowe_vector(table, tweet({"cat", "zebra", "#dog"}))),
            (std::vector<double>{1.0, 0.0, 0.0}));
  EXPECT_TRUE(mowe_vector(table, tweet({"zebra", "#cat"})).is_zero());
  // Duplicates weigh in: (2 cat + dog) / 3.
  const auto skew = values(mowe_vector(table, tweet({"cat", "cat", "dog"})));
  EXPECT_NEAR(skew[0], 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(skew[1], 1.0 / 3.0, 1e-15);
  // Hashtag tokens are looked up verbatim when let in.
  const float tag[] = {0, 0, 2};
  table.add("#cat", tag);
  EXPECT_TRUE(mowe_vector(table, tweet({"#cat"})).is_zero());
  EXPECT_EQ(values(mowe_vector(table, tweet({"#cat"}), {.include_hashtags = true})),
            (std::vector<double>{0.0, 0.0, 2.0}));
}

TEST(Mowe, PermutationInvariant) {
  const auto corpus = testing::make_synthetic_corpus(12, {.tweets = 50});
  const auto table = corpus.table();
  testing::SplitMix rng(1);
  for (const auto& r : corpus.tweets) {
    auto t = normalize(r, StopwordList::english());
    const auto before = mowe_vector(table, t);
    for (std::size_t i = t.tokens.size(); i > 1; --i) std::swap(t.tokens[i - 1], t.tokens[rng.below(i)]);
    const auto after = mowe_vector(table, t);
    for (std::size_t i = 0; i < before.dimension(); ++i) {
      ASSERT_NEAR(before.values()[i], after.values()[i], 1e-12);
    }
  }
}

TEST(EmbeddingTable, RejectsBadVectors) {
  EmbeddingTable table(2);
  const float short_row[] = {1.0f};
  const float bad[] = {1.0f, INFINITY};
  EXPECT_THROW(table.add("x", short_row), DimensionMismatch);
  EXPECT_THROW(table.add("x", bad), ConfigError);
  EXPECT_THROW(EmbeddingTable(0), ConfigError);
}

TEST(Vectorizer, DispatchesOnBackend) {
  const std::vector<CleanTweet> corpus = {tweet({"cat", "dog"})};
  const Vectorizer tf(fit_tfidf(corpus));
  EXPECT_EQ(tf.kind(), VectorizerKind::tfidf);
  EXPECT_EQ(tf.dimension(), 2u);

  EmbeddingTable table(4);
  const Vectorizer mw(std::move(table), {});
  EXPECT_EQ(mw.kind(), VectorizerKind::mowe);
  EXPECT_EQ(mw.vectorize(tweet({"cat"})).dimension(), 4u);

  EXPECT_EQ(parse_vectorizer_kind("mowe"), VectorizerKind::mowe);
  EXPECT_THROW(parse_vectorizer_kind("bm25"), ConfigError);
}

}  // namespace
}  // namespace hitratio
