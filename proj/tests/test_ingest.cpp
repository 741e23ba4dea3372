#include <doctest.h>

#include <stdexcept>

#include <sstream>

#include "minkcheb/ingest.hpp"

using namespace minkcheb;
using namespace minkcheb::ingest;

TEST_CASE("csv parsing") {
    std::istringstream in("x,y,label\n1,2,a\n3,4,b\n5,6,a\n");
    auto ds = parse_csv(in, "toy");
    CHECK(ds.n_features == 2);
    CHECK(ds.size() == 3);
    CHECK(ds.class_table == std::vector<std::string>{"a", "b"});
    CHECK(ds.instances[1].features == FeatureVector{3, 4});
    CHECK(ds.instances[2].label == 0);
}

TEST_CASE("csv label column selection and CRLF") {
    std::istringstream in("label,x\r\na,1\r\nb,2\r\n");
    auto ds = parse_csv(in, "toy", std::string("label"));
    CHECK(ds.n_features == 1);
    CHECK(ds.instances[0].features == FeatureVector{1});
}

TEST_CASE("csv rejections") {
    std::istringstream nan_cell("x,label\nNaN,a\n2,b\n");
    CHECK_THROWS_WITH_AS(parse_csv(nan_cell, "toy"),
                         doctest::Contains("row 2"), std::runtime_error);

    std::istringstream header_only("x,label\n");
    CHECK_THROWS_WITH_AS(parse_csv(header_only, "toy"),
                         doctest::Contains("no instances"), std::runtime_error);

    std::istringstream ragged("x,y,label\n1,2,a\n1,b\n");
    CHECK_THROWS_WITH_AS(parse_csv(ragged, "toy"),
                         doctest::Contains("ragged"), std::runtime_error);

    std::istringstream one_class("x,label\n1,a\n2,a\n");
    CHECK_THROWS_AS(parse_csv(one_class, "toy"), std::runtime_error);

    std::istringstream text_cell("x,label\nhello,a\n2,b\n");
    CHECK_THROWS_WITH_AS(parse_csv(text_cell, "toy"),
                         doctest::Contains("column 'x'"), std::runtime_error);
}

TEST_CASE("arff parsing") {
    std::istringstream in(
        "% toy relation\n"
        "@RELATION toy\n"
        "@ATTRIBUTE width numeric\n"
        "@attribute height REAL\n"
        "@attribute class {a, b}\n"
        "@DATA\n"
        "1.5, 2.5, a\n"
        "3.5, 4.5, b\n");
    auto ds = parse_arff(in, "toy");
    CHECK(ds.n_features == 2);
    CHECK(ds.size() == 2);
    CHECK(ds.class_table == std::vector<std::string>{"a", "b"});
    CHECK(ds.instances[0].features == FeatureVector{1.5, 2.5});
    CHECK(ds.instances[1].label == 1);
}

TEST_CASE("arff rejections") {
    std::istringstream str_attr(
        "@relation t\n@attribute name string\n@attribute class {a,b}\n@data\nx,a\n");
    CHECK_THROWS_WITH_AS(parse_arff(str_attr, "toy"),
                         doctest::Contains("categorical attributes unsupported"),
                         std::runtime_error);

    std::istringstream missing(
        "@relation t\n@attribute x numeric\n@attribute class {a,b}\n@data\n?,a\n1,b\n");
    CHECK_THROWS_WITH_AS(parse_arff(missing, "toy"),
                         doctest::Contains("missing value"), std::runtime_error);

    std::istringstream no_data("@relation t\n@attribute x numeric\n@attribute class {a,b}\n");
    CHECK_THROWS_WITH_AS(parse_arff(no_data, "toy"),
                         doctest::Contains("@data"), std::runtime_error);
}

TEST_CASE("csv and arff of the same data agree") {
    std::istringstream csv_in("f0,f1,class\n1,2,a\n3,4,b\n");
    std::istringstream arff_in(
        "@relation t\n@attribute f0 numeric\n@attribute f1 numeric\n"
        "@attribute class {a,b}\n@data\n1,2,a\n3,4,b\n");
    auto from_csv = parse_csv(csv_in, "t");
    auto from_arff = parse_arff(arff_in, "t");
    CHECK(from_csv.class_table == from_arff.class_table);
    REQUIRE(from_csv.size() == from_arff.size());
    for (std::size_t i = 0; i < from_csv.size(); ++i) {
        CHECK(from_csv.instances[i].features == from_arff.instances[i].features);
        CHECK(from_csv.instances[i].label == from_arff.instances[i].label);
    }
}

TEST_CASE("csv round trip") {
    std::istringstream in("f0,f1,class\n1.25,-3.5,a\n0.125,7,b\n2,2,a\n");
    auto ds = parse_csv(in, "t");
    std::istringstream again(to_csv(ds));
    auto ds2 = parse_csv(again, "t");
    CHECK(ds2.class_table == ds.class_table);
    REQUIRE(ds2.size() == ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) {
        CHECK(ds2.instances[i].features == ds.instances[i].features);
        CHECK(ds2.instances[i].label == ds.instances[i].label);
    }
}

TEST_CASE("minmax rescaling") {
    Dataset ds;
    ds.name = "t";
    ds.class_table = {"a", "b"};
    ds.n_features = 2;
    ds.instances = {{{0, 7}, 0}, {{5, 7}, 1}, {{10, 7}, 0}};

    auto scaled = minmax_rescale(ds);
    CHECK(scaled.instances[0].features == FeatureVector{0, 0});
    CHECK(scaled.instances[1].features == FeatureVector{0.5, 0});  // constant column -> 0
    CHECK(scaled.instances[2].features == FeatureVector{1, 0});

    auto twice = minmax_rescale(scaled);
    for (std::size_t i = 0; i < ds.size(); ++i)
        CHECK(twice.instances[i].features == scaled.instances[i].features);
}
