#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "biblio/countries.hpp"
#include "biblio/errors.hpp"

using biblio::CountryTable;

TEST_SUITE("countries") {

TEST_CASE("resolves the final comma token") {
  const CountryTable& t = CountryTable::builtin();
  CHECK(t.resolve("Univ Ctr Svalbard, Longyearbyen, Norway") == "NORWAY");
  CHECK(t.resolve("Univ Oslo, Oslo, Norway.") == "NORWAY");
  CHECK(t.resolve("NORWAY") == "NORWAY");
}

TEST_CASE("applies the alias table") {
  const CountryTable& t = CountryTable::builtin();
  CHECK(t.resolve("Univ Sheffield, Sheffield S10 2TN, S Yorkshire, England") ==
        "UNITED KINGDOM");
  CHECK(t.resolve("Univ Aberdeen, Aberdeen AB24 3UE, Scotland") == "UNITED KINGDOM");
  CHECK(t.resolve("Polar Res Inst China, Shanghai, Peoples R China") == "CHINA");
  CHECK(t.resolve("Greenland Inst Nat Resources, Nuuk, Greenland") == "DENMARK");
}

TEST_CASE("state plus ZIP resolves to USA") {
  const CountryTable& t = CountryTable::builtin();
  CHECK(t.resolve("Univ Alaska, Fairbanks, AK 99775 USA") == "USA");
  CHECK(t.resolve("NASA Goddard Space Flight Ctr, Greenbelt, MD 20771 USA") == "USA");
  CHECK(t.resolve("Somewhere, USA") == "USA");
}

TEST_CASE("unknown countries come back unresolved without aborting") {
  const CountryTable& t = CountryTable::builtin();
  bool known = true;
  CHECK(t.resolve("Inst Marine Res, Atlantis", &known) == CountryTable::kUnresolved);
  CHECK_FALSE(known);
  known = true;
  CHECK(t.resolve("", &known) == CountryTable::kUnresolved);
  CHECK_FALSE(known);
}

TEST_CASE("leading author group in brackets is skipped") {
  const CountryTable& t = CountryTable::builtin();
  CHECK(t.resolve("[Berg, A.] Univ Oslo, Oslo, Norway") == "NORWAY");
}

TEST_CASE("user table overrides the packaged one") {
  const CountryTable t = CountryTable::from_text("WONDERLAND\nOZ = WONDERLAND\n");
  CHECK(t.resolve("Somewhere, Wonderland") == "WONDERLAND");
  CHECK(t.resolve("Somewhere, Oz") == "WONDERLAND");
  CHECK(t.resolve("Somewhere, Norway") == CountryTable::kUnresolved);
  CHECK_THROWS_AS(CountryTable::from_text("A = B\n"), biblio::Error);
}

TEST_CASE("tables load from files with comments") {
  const auto path = std::filesystem::temp_directory_path() / "bibliotk_countries_test.txt";
  {
    std::ofstream out(path);
    out << "# comment\nATLANTIS\nMU = ATLANTIS  # trailing comment\n";
  }
  const CountryTable t = CountryTable::load(path);
  CHECK(t.resolve("Deep Inst, Atlantis") == "ATLANTIS");
  CHECK(t.resolve("Deep Inst, Mu") == "ATLANTIS");
  std::filesystem::remove(path);
  CHECK_THROWS_AS(CountryTable::load(path), biblio::Error);
}

}  // TEST_SUITE
