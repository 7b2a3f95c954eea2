#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "upscale/stream.hpp"

using namespace upscale;

TEST_CASE("bicubic window fill latency: first pixel emits nothing") {
  const ScaleJob job(Method::Bicubic, Mode::Fixed, Scale(2, 1), 8, 8);
  StreamScaler engine(job);
  CHECK(engine.push_pixel(10).empty());
}

TEST_CASE("identity scale reproduces the input in both modes and methods") {
  std::mt19937 rng(11);
  const auto img = testing::random_image(rng, 13, 9);
  for (const auto m : {Method::Bilinear, Method::Bicubic})
    for (const auto mode : {Mode::Exact, Mode::Fixed})
      CHECK(scale_image(img, ScaleJob(m, mode, Scale(3, 3), 13, 9)) == img);
}

TEST_CASE("every output is emitted exactly once, raster-ordered within each ingest") {
  std::mt19937 rng(12);
  const auto img = testing::random_image(rng, 10, 7);
  const ScaleJob job(Method::Bicubic, Mode::Exact, Scale(3, 2), 10, 7);
  StreamScaler engine(job);
  std::vector<int> hits(job.out_width() * job.out_height(), 0);
  for (const auto p : img.pixels()) {
    const auto batch = engine.push_pixel(p);
    for (std::size_t i = 0; i < batch.size(); ++i) {
      ++hits[batch[i].y * job.out_width() + batch[i].x];
      if (i > 0) {
        const auto& a = batch[i - 1];
        const auto& b = batch[i];
        CHECK((a.y < b.y || (a.y == b.y && a.x < b.x)));
      }
    }
  }
  CHECK(engine.done());
  CHECK(engine.emitted() == job.out_width() * job.out_height());
  CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
  CHECK_THROWS_AS(engine.push_pixel(0), std::out_of_range);
}

TEST_CASE("upscaling emits several pixels per ingest once rows complete") {
  const ScaleJob job(Method::Bilinear, Mode::Fixed, Scale(3, 1), 4, 4);
  StreamScaler engine(job);
  std::size_t most = 0;
  for (int i = 0; i < 16; ++i) most = std::max(most, engine.push_pixel(static_cast<Pixel>(i)).size());
  CHECK(most > 1);
}

TEST_CASE("constant image stays constant under 2x bicubic") {
  const Image img(256, 256, 77);
  const auto out = scale_image(img, ScaleJob(Method::Bicubic, Mode::Exact, Scale(2, 1), 256, 256));
  CHECK(out == Image(512, 512, 77));
}

TEST_CASE("2x bilinear of a checkerboard matches the reference scaler") {
  const Image checker(2, 2, {0, 255, 255, 0});
  for (const auto mode : {Mode::Exact, Mode::Fixed}) {
    const ScaleJob job(Method::Bilinear, mode, Scale(2, 1), 2, 2);
    const auto out = scale_image(checker, job);
    CHECK(out == scale_image_reference(checker, job));
    CHECK(out.width() == 4);
  }
  // corners replicate, centre blends: source positions -1/4, 1/4, 3/4, 5/4
  const auto exact = scale_image(checker, ScaleJob(Method::Bilinear, Mode::Exact, Scale(2, 1), 2, 2));
  CHECK(exact.at(0, 0) == 0);
  CHECK(exact.at(3, 3) == 0);
  CHECK(exact.at(3, 0) == 255);
  CHECK(exact.at(1, 1) == 96);  // 255 * 6/16 = 95.625
}

TEST_CASE("bilinear on a linear ramp reproduces the ramp in the interior") {
  Image ramp(4, 4);
  for (std::size_t y = 0; y < 4; ++y)
    for (std::size_t x = 0; x < 4; ++x) ramp.set(x, y, static_cast<Pixel>(5 + 10 * x + 20 * y));
  const auto out = scale_image_reference(ramp, ScaleJob(Method::Bilinear, Mode::Exact, Scale(2, 1), 4, 4));
  for (std::size_t v = 1; v < 7; ++v) {
    for (std::size_t u = 1; u < 7; ++u) {
      const auto sx = (Rational(static_cast<std::int64_t>(u)) + Rational(1, 2)) / 2 - Rational(1, 2);
      const auto sy = (Rational(static_cast<std::int64_t>(v)) + Rational(1, 2)) / 2 - Rational(1, 2);
      const auto expected = (Rational(5) + 10 * sx + 20 * sy).round_half_up();
      CHECK(out.at(u, v) == expected);
    }
  }
}

TEST_CASE("2x downscale averages 2x2 blocks for bilinear") {
  std::mt19937 rng(13);
  const auto img = testing::random_image(rng, 8, 6);
  const ScaleJob job(Method::Bilinear, Mode::Exact, Scale(1, 2), 8, 6);
  const auto out = scale_image(img, job);
  REQUIRE(out.width() == 4);
  REQUIRE(out.height() == 3);
  for (std::size_t v = 0; v < 3; ++v) {
    for (std::size_t u = 0; u < 4; ++u) {
      const int sum = img.at(2 * u, 2 * v) + img.at(2 * u + 1, 2 * v) + img.at(2 * u, 2 * v + 1) +
                      img.at(2 * u + 1, 2 * v + 1);
      CHECK(out.at(u, v) == Rational(sum, 4).round_half_up());
    }
  }
  CHECK(out == scale_image_reference(img, job));
}

TEST_CASE("1x1 input upscales to a constant image") {
  const Image one(1, 1, {201});
  for (const auto m : {Method::Bilinear, Method::Bicubic}) {
    const auto out = scale_image(one, ScaleJob(m, Mode::Fixed, Scale(3, 1), 1, 1));
    CHECK(out == Image(3, 3, 201));
  }
}

TEST_CASE("streaming equals the random-access reference on randomized jobs") {
  std::mt19937 rng(14);
  const std::vector<Scale> scales{{1, 1}, {3, 2}, {2, 1}, {3, 1}, {1, 2}, {2, 3}, {5, 4}};
  std::uniform_int_distribution<std::size_t> dim(1, 40);
  std::uniform_int_distribution<std::size_t> pick(0, scales.size() - 1);
  std::uniform_int_distribution<int> frac(4, 16);
  for (int n = 0; n < 120; ++n) {
    const auto w = dim(rng);
    const auto h = dim(rng);
    const auto img = testing::random_image(rng, w, h);
    const auto method = n % 2 ? Method::Bicubic : Method::Bilinear;
    const auto mode = (n / 2) % 2 ? Mode::Fixed : Mode::Exact;
    const ScaleJob job(method, mode, scales[pick(rng)], scales[pick(rng)], w, h, QFormat(frac(rng)));
    CAPTURE(n);
    REQUIRE(scale_image(img, job) == scale_image_reference(img, job));
  }
}

TEST_CASE("streaming state holds at most N+1 rows plus the window") {
  for (const auto m : {Method::Bilinear, Method::Bicubic}) {
    const ScaleJob job(m, Mode::Fixed, Scale(2, 1), 100, 50);
    StreamScaler engine(job);
    const auto n = job.line_buffers();
    const auto k = job.window_size();
    CHECK(engine.storage_pixels() == n * 100 + k * k);
    CHECK(engine.storage_pixels() <= (n + 1) * 100 + k * k);
    CHECK(engine.storage_pixels() < 100 * 50);
  }
}

TEST_CASE("mismatched image and job are rejected") {
  const Image img(4, 4);
  CHECK_THROWS_AS(scale_image(img, ScaleJob(Method::Bicubic, Mode::Exact, Scale(2, 1), 5, 4)), std::invalid_argument);
}
