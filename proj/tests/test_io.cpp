#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <toric/fan_io.hpp>

using namespace toric;

namespace {

const char* kP2File = R"(# the plane
dim 2
rays
1 0
0 1
-1 -1
cones
1 2
2 3
1 3
)";

const char* kDp6File = R"(dim 2
rays
0 1
1 1
1 0
0 -1
-1 -1
-1 0
cones
1 2
2 3
3 4
4 5
5 6
6 1
bundle
1 1 1 1 1 1
)";

}  // namespace

TEST_CASE("parsing the plane") {
    const FanFile file = parse_fan_file(kP2File);
    CHECK(file.fan == projective_space(2));
    CHECK_FALSE(file.bundle.has_value());
}

TEST_CASE("parsing del Pezzo 6 with the anticanonical bundle") {
    const FanFile file = parse_fan_file(kDp6File);
    CHECK(file.fan == del_pezzo_6());
    REQUIRE(file.bundle.has_value());
    CHECK(file.bundle->coeffs() == std::vector<Int>(6, 1));
}

TEST_CASE("comments and blank lines are ignored") {
    const FanFile file = parse_fan_file("# heading\n\ndim 2\nrays # inline\n1 0\n0 1\n-1 -1\n"
                                        "\ncones\n1 2\n2 3\n1 3\n");
    CHECK(file.fan == projective_space(2));
}

TEST_CASE("non-primitive rays in a file are the fan's error, verbatim") {
    CHECK_THROWS_AS(parse_fan_file("dim 2\nrays\n2 4\n0 1\n-1 -1\ncones\n1 2\n2 3\n1 3\n"),
                    NonPrimitiveRay);
}

TEST_CASE("parse errors carry the position") {
    try {
        parse_fan_file("dim 2\nrays\n1 0\n0 one\n-1 -1\ncones\n1 2\n2 3\n1 3\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
        CHECK(e.column() == 3);
    }

    CHECK_THROWS_AS(parse_fan_file(""), ParseError);
    CHECK_THROWS_AS(parse_fan_file("dim 2\nrays\ncones\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_fan_file("dim 2\nrays\n1 0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_fan_file("dim 0\nrays\n1\ncones\n1\n"), ParseError);
    CHECK_THROWS_AS(
        parse_fan_file("dim 2\nrays\n1 0\n0 1\n-1 -1\ncones\n1 2\n2 3\n1 3\nbundle\n1 1\n"),
        ParseError);
    CHECK_THROWS_AS(
        parse_fan_file("dim 2\nrays\n1 0\n0 1\n-1 -1\ncones\n1 2\n2 3\n1 3\ntrailing\n"),
        ParseError);
}

TEST_CASE("cone indices are validated") {
    CHECK_THROWS_AS(parse_fan_file("dim 2\nrays\n1 0\n0 1\n-1 -1\ncones\n1 2\n2 3\n1 7\n"),
                    ValidationError);
    CHECK_THROWS_AS(parse_fan_file("dim 2\nrays\n1 0\n0 1\n-1 -1\ncones\n1 2\n2 3\n0 1\n"),
                    ValidationError);
}

TEST_CASE("mutated inputs never escape the error hierarchy") {
    std::mt19937_64 rng(0xF022);
    const std::string base = serialize_fan_file(del_pezzo_6(), nullptr);
    for (int trial = 0; trial < 500; ++trial) {
        std::string text = base;
        const int edits = 1 + static_cast<int>(rng() % 4);
        for (int e = 0; e < edits; ++e) {
            const std::size_t pos = rng() % text.size();
            switch (rng() % 3) {
                case 0: text[pos] = static_cast<char>(rng() % 96 + 32); break;
                case 1: text.erase(pos, 1); break;
                default: text.insert(pos, 1, static_cast<char>(rng() % 96 + 32)); break;
            }
        }
        try {
            parse_fan_file(text);  // surviving a mutation is fine
        } catch (const Error&) {
            // every failure must be a typed library error
        }
    }
    SUCCEED("no mutation crashed or threw outside the Error hierarchy");
}

TEST_CASE("serialize and parse round-trip") {
    std::vector<std::pair<Fan, std::optional<LineBundle>>> cases;
    cases.emplace_back(projective_space(3), std::nullopt);
    cases.emplace_back(hirzebruch(2), LineBundle(hirzebruch(2), {1, 3, 0, 0}));
    cases.emplace_back(del_pezzo_6(), anticanonical_bundle(del_pezzo_6()));
    const Fan bl = blow_up(del_pezzo_6(), 4).fan;
    cases.emplace_back(bl, -canonical_bundle(bl));

    for (const auto& [fan, bundle] : cases) {
        const std::string text = serialize_fan_file(fan, bundle ? &*bundle : nullptr);
        const FanFile parsed = parse_fan_file(text);
        CHECK(parsed.fan == fan);
        if (bundle) {
            REQUIRE(parsed.bundle.has_value());
            CHECK(parsed.bundle->coeffs() == bundle->coeffs());
        } else {
            CHECK_FALSE(parsed.bundle.has_value());
        }
        // and the serialization itself is stable
        CHECK(serialize_fan_file(parsed.fan, parsed.bundle ? &*parsed.bundle : nullptr) == text);
    }
}
