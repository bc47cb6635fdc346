#include "doctest.h"

#include "dgorder/io.hpp"

using namespace dgo;

TEST_CASE("catalog examples round-trip through the file format") {
    for (const auto& name : example_names()) {
        AlgebraFile f = to_file(build_example(name, {}));
        std::string text = write_algebra_file(f);
        AlgebraFile g = parse_algebra_file(text);
        CHECK(g.algebra == f.algebra);
        CHECK(g.order == f.order);
        CHECK(write_algebra_file(g) == text);
    }
    AlgebraFile f5 = to_file(build_example("mat2_dx", {{"x", "1"}, {"ring", "F(5)"}}));
    CHECK(parse_algebra_file(write_algebra_file(f5)).algebra == f5.algebra);
}

TEST_CASE("modules round-trip") {
    AlgebraFile f = to_file(build_example("mat2_dx", {{"x", "1"}}));
    f.module = regular_module(share(f.algebra));
    AlgebraFile g = parse_algebra_file(write_algebra_file(f));
    REQUIRE(g.module);
    CHECK(g.module->degrees() == f.module->degrees());
    CHECK(g.module->actions() == f.module->actions());
    CHECK(g.module->delta() == f.module->delta());
}

TEST_CASE("parse errors carry line and column") {
    auto message = [](const std::string& text) {
        try {
            parse_algebra_file(text);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::ParseError);
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message("ring Q\nbasis\n  a 0\nmult\n  0 0 0 x\n").find("5:9:") != std::string::npos);
    CHECK(message("ring R\n").find("1:6:") != std::string::npos);
    CHECK(message("ring Q\nbasis\n  a 0\nmult\n  0 0 3 1\n").find("5:7:") != std::string::npos);
    CHECK(message("ring Q\nbasis\n  a 0\nmult\n  0 0 0\n").find("5:8:") != std::string::npos);
    CHECK(message("  a 0\n").find("1:3:") != std::string::npos);
    CHECK(message("ring Q\nring Q\n").find("2:1:") != std::string::npos);
    CHECK(message("ring Q\nbasis\n  a 0\nmult\n  0 0 0 1\nblocks 2\n").find("6:1:") != std::string::npos);
}

TEST_CASE("a missing unit is solved for") {
    AlgebraFile f = parse_algebra_file("ring Q\nbasis\n  a 0\n  b 0\nmult\n  0 0 0 1\n  1 1 1 1\n");
    CHECK(f.algebra.algebra.unit() == QVec{1, 1});
}
