#include <catch2/catch_amalgamated.hpp>

#include <jtwist/borel.hpp>
#include <jtwist/series.hpp>
#include <jtwist/tensor.hpp>

#include <map>
#include <random>
#include <string>

using namespace jtwist;

namespace {

// ---- brute-force oracle: word rewriting with the single-step rules --------
// DA -> AD - A, DE -> ED - E, EA -> AE, applied until every word is sorted.

using Word = std::string;
using WordSum = std::map<Word, GaussianRational>;

void add_word(WordSum& ws, const Word& w, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = ws.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) ws.erase(it);
    }
}

WordSum normal_order_words(WordSum pending) {
    WordSum done;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const Word& w = node.key();
        const GaussianRational c = node.mapped();
        bool rewritten = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            const char x = w[i], y = w[i + 1];
            if (x == 'D' && (y == 'A' || y == 'E')) {
                Word swapped = w;
                std::swap(swapped[i], swapped[i + 1]);
                add_word(pending, swapped, c);
                add_word(pending, w.substr(0, i) + y + w.substr(i + 2), -c);
                rewritten = true;
                break;
            }
            if (x == 'E' && y == 'A') {
                Word swapped = w;
                std::swap(swapped[i], swapped[i + 1]);
                add_word(pending, swapped, c);
                rewritten = true;
                break;
            }
        }
        if (!rewritten) add_word(done, w, c);
    }
    return done;
}

Word mono_word(const Mono& mono) {
    return Word(mono.m, 'A') + Word(mono.s, 'E') + Word(mono.n, 'D');
}

BorelElement words_to_element(const WordSum& ws, unsigned order) {
    BorelElement x(order);
    for (const auto& [w, c] : ws) {
        Mono mono;
        for (char g : w) (g == 'A' ? mono.m : g == 'E' ? mono.s : mono.n) += 1;
        x.add_term(mono, c);
    }
    return x;
}

// ---- random element generators ---------------------------------------------

GaussianRational random_coef(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 4);
    return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

BorelElement random_element(std::mt19937& rng, unsigned order) {
    std::uniform_int_distribution<unsigned> deg(0, 2);
    BorelElement x(order);
    for (int t = 0; t < 4; ++t) x.add_term(Mono{deg(rng), deg(rng), deg(rng)}, random_coef(rng));
    return x;
}

Tensor2 random_tensor(std::mt19937& rng, unsigned order) {
    std::uniform_int_distribution<unsigned> deg(0, 2);
    Tensor2 x(order);
    for (int t = 0; t < 4; ++t)
        x.add_term({Mono{deg(rng), deg(rng), deg(rng)}, Mono{deg(rng), deg(rng), deg(rng)}}, random_coef(rng));
    return x;
}

// grade >= 1 element, for exp/log domains
BorelElement random_positive_grade(std::mt19937& rng, unsigned order) {
    std::uniform_int_distribution<unsigned> am(1, 2), deg(0, 2);
    BorelElement x(order);
    for (int t = 0; t < 3; ++t) x.add_term(Mono{am(rng), deg(rng), deg(rng)}, random_coef(rng));
    return x;
}

const GaussianRational one{1};

}  // namespace

TEST_CASE("pbw product matches the single-step rewrite oracle", "[borel]") {
    const unsigned N = 8;  // no truncation interference for degrees <= 4+4
    std::vector<Mono> monos;
    for (unsigned m = 0; m <= 4; ++m)
        for (unsigned s = 0; m + s <= 4; ++s)
            for (unsigned n = 0; m + s + n <= 4; ++n) monos.push_back(Mono{m, s, n});

    for (const Mono& x : monos) {
        for (const Mono& y : monos) {
            WordSum seed;
            add_word(seed, mono_word(x) + mono_word(y), one);
            const BorelElement expect = words_to_element(normal_order_words(seed), N);
            const BorelElement got =
                BorelElement::monomial(N, x, one) * BorelElement::monomial(N, y, one);
            REQUIRE(got == expect);
        }
    }
}

TEST_CASE("pbw product pinned examples", "[borel]") {
    const unsigned N = 4;
    const auto A = BorelElement::gen_a(N), D = BorelElement::gen_d(N);

    // D·A = AD - A
    BorelElement da(N);
    da.add_term(Mono{1, 0, 1}, one);
    da.add_term(Mono{1, 0, 0}, -one);
    CHECK(D * A == da);

    // (AD)·(AD) = A^2 D^2 - A^2 D
    const BorelElement ad = A * D;
    BorelElement adad(N);
    adad.add_term(Mono{2, 0, 2}, one);
    adad.add_term(Mono{2, 0, 1}, -one);
    CHECK(ad * ad == adad);

    std::mt19937 rng(3);
    for (int t = 0; t < 20; ++t) {
        const BorelElement x = random_element(rng, N);
        CHECK(BorelElement::unit(N) * x == x);
        CHECK(x * BorelElement::unit(N) == x);
    }

    CHECK_THROWS_AS(BorelElement::unit(3) * BorelElement::unit(4), std::domain_error);
}

TEST_CASE("product associativity on random triples", "[borel]") {
    std::mt19937 rng(11);
    for (unsigned order = 0; order <= 6; ++order) {
        for (int t = 0; t < 6; ++t) {
            const auto x = random_element(rng, order), y = random_element(rng, order), z = random_element(rng, order);
            CHECK((x * y) * z == x * (y * z));
            const auto tx = random_tensor(rng, order), ty = random_tensor(rng, order), tz = random_tensor(rng, order);
            CHECK((tx * ty) * tz == tx * (ty * tz));
        }
    }
}

TEST_CASE("undeformed coproduct", "[borel]") {
    const unsigned N = 4;
    const auto A = BorelElement::gen_a(N), D = BorelElement::gen_d(N);

    Tensor2 dd(N);
    dd.add_term({Mono{0, 0, 1}, Mono{}}, one);
    dd.add_term({Mono{}, Mono{0, 0, 1}}, one);
    CHECK(coproduct0(D) == dd);

    // Δ0 of the product DA computed two ways
    CHECK(coproduct0(D * A) == coproduct0(D) * coproduct0(A));

    std::mt19937 rng(17);
    for (int t = 0; t < 12; ++t) {
        const auto x = random_element(rng, N), y = random_element(rng, N);
        CHECK(coproduct0(x * y) == coproduct0(x) * coproduct0(y));
    }
}

TEST_CASE("counit and undeformed antipode", "[borel]") {
    const unsigned N = 4;
    const auto A = BorelElement::gen_a(N), D = BorelElement::gen_d(N);

    CHECK((BorelElement::unit(N) + A * D).counit() == one);
    CHECK(A.counit() == GaussianRational());

    // S0(AD) = (-D)(-A) = DA = AD - A
    const BorelElement expect = D * A;
    CHECK((A * D).antipode0() == expect);

    // Hopf axioms, exact, on random elements
    std::mt19937 rng(23);
    for (int t = 0; t < 12; ++t) {
        const BorelElement x = random_element(rng, N);
        const Tensor2 dx = coproduct0(x);
        CHECK(counit_first(dx) == x);
        CHECK(counit_second(dx) == x);
        CHECK(coproduct0_first(dx) == coproduct0_second(dx));
        const BorelElement folded = multiply_first_mapped(
            dx, [&](const Mono& mono) { return BorelElement::monomial(N, mono, one).antipode0(); });
        CHECK(folded == BorelElement::unit(N) * x.counit());
        // antihomomorphism property
        const BorelElement y = random_element(rng, N);
        CHECK((x * y).antipode0() == y.antipode0() * x.antipode0());
    }

    // μ(S0 ⊗ id)Δ0(D) = ε(D) = 0
    const BorelElement axiom_d = multiply_first_mapped(
        coproduct0(D), [&](const Mono& mono) { return BorelElement::monomial(N, mono, one).antipode0(); });
    CHECK(axiom_d.is_zero());
}

TEST_CASE("exp and log series", "[borel]") {
    const unsigned N = 3;
    const auto A = BorelElement::gen_a(N);
    const auto unit = BorelElement::unit(N);

    CHECK(exp_series(BorelElement(N)) == unit);

    // log(1 + A) = A - A^2/2 + A^3/3 at N=3
    BorelElement mercator(N);
    mercator.add_term(Mono{1, 0, 0}, one);
    mercator.add_term(Mono{2, 0, 0}, GaussianRational(Rational(-1, 2)));
    mercator.add_term(Mono{3, 0, 0}, GaussianRational(Rational(1, 3)));
    CHECK(log_series(unit + A) == mercator);

    // exp(log(1 + A⊗D)) = 1 + A⊗D at several orders
    for (unsigned order : {1u, 2u, 4u, 6u}) {
        Tensor2 x = Tensor2::unit(order);
        x.add_term({Mono{1, 0, 0}, Mono{0, 0, 1}}, one);
        CHECK(exp_series(log_series(x)) == x);
    }

    CHECK_THROWS_AS(exp_series(BorelElement::gen_d(N)), std::domain_error);
    CHECK_THROWS_AS(log_series(BorelElement::gen_a(N)), std::domain_error);

    std::mt19937 rng(31);
    for (int t = 0; t < 10; ++t) {
        const BorelElement y = random_positive_grade(rng, 4);
        CHECK(log_series(exp_series(y)) == y);
        CHECK(exp_series(log_series(BorelElement::unit(4) + y)) == BorelElement::unit(4) + y);
        const Tensor2 ty = [&] {
            std::mt19937 inner(t);
            Tensor2 z(4);
            std::uniform_int_distribution<unsigned> am(1, 2), deg(0, 2);
            for (int k = 0; k < 3; ++k)
                z.add_term({Mono{am(inner), 0, deg(inner)}, Mono{deg(inner) == 1 ? 1u : 0u, 0, deg(inner)}},
                           random_coef(inner));
            return z;
        }();
        CHECK(log_series(exp_series(ty)) == ty);
    }

    // Neumann inversion: x * invert(x) == 1 for x = 1 + grade-positive part
    std::mt19937 rng2(37);
    for (int t = 0; t < 10; ++t) {
        const BorelElement x = BorelElement::unit(4) + random_positive_grade(rng2, 4);
        CHECK(x * invert(x) == BorelElement::unit(4));
        CHECK(invert(x) * x == BorelElement::unit(4));
    }
}

TEST_CASE("flip is a leg transposition and involution", "[borel]") {
    const unsigned N = 4;
    Tensor2 ad(N);
    ad.add_term({Mono{1, 0, 0}, Mono{0, 0, 1}}, one);
    Tensor2 da(N);
    da.add_term({Mono{0, 0, 1}, Mono{1, 0, 0}}, one);
    CHECK(flip(ad) == da);
    CHECK(flip(Tensor2::unit(N)) == Tensor2::unit(N));

    std::mt19937 rng(41);
    for (int t = 0; t < 12; ++t) {
        const Tensor2 x = random_tensor(rng, N);
        CHECK(flip(flip(x)) == x);
        const Tensor2 y = random_tensor(rng, N);
        CHECK(flip(x * y) == flip(x) * flip(y));
    }
}

TEST_CASE("element rendering is canonical", "[borel]") {
    const unsigned N = 4;
    BorelElement x(N);
    x.add_term(Mono{2, 1, 3}, one);
    CHECK(x.str() == "A^2 E D^3");
    x.add_term(Mono{}, GaussianRational(Rational(-1, 2)));
    CHECK(x.str() == "-1/2 + A^2 E D^3");

    Tensor2 t(N);
    t.add_term({Mono{0, 0, 1}, Mono{1, 0, 0}}, GaussianRational(Rational(1, 2)));
    t.add_term({Mono{1, 0, 0}, Mono{0, 0, 1}}, GaussianRational(Rational(-1, 2)));
    CHECK(t.str() == "1/2 D⊗A - 1/2 A⊗D");
    CHECK(BorelElement(N).str() == "0");
}
