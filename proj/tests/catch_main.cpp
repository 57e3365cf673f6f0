// Catch2 v3 amalgamated implementation; the default main comes with it.
#include <catch2/catch_amalgamated.cpp>
