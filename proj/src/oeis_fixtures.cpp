/*
   Copyright 2026 the stripcomb authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Generated by scripts/gen_oeis_fixtures.py. Do not edit by hand.

#include "stripcomb/oeis.hpp"

namespace stripcomb {

const std::vector<OeisFixture>& bundled_fixtures() {
  static const std::vector<OeisFixture> fixtures = {
      {"A000045",
       {"0", "1", "1", "2", "3", "5", "8", "13", "21", "34", "55", "89",
        "144", "233", "377", "610", "987", "1597", "2584", "4181", "6765",
        "10946", "17711", "28657", "46368", "75025", "121393", "196418",
        "317811", "514229", "832040", "1346269", "2178309", "3524578",
        "5702887", "9227465", "14930352", "24157817", "39088169", "63245986"}},
      {"A001045",
       {"0", "1", "1", "3", "5", "11", "21", "43", "85", "171", "341", "683",
        "1365", "2731", "5461", "10923", "21845", "43691", "87381", "174763",
        "349525", "699051", "1398101", "2796203", "5592405", "11184811",
        "22369621", "44739243", "89478485", "178956971", "357913941",
        "715827883", "1431655765", "2863311531", "5726623061", "11453246123",
        "22906492245", "45812984491", "91625968981", "183251937963"}},
      {"A005578",
       {"1", "1", "2", "3", "6", "11", "22", "43", "86", "171", "342", "683",
        "1366", "2731", "5462", "10923", "21846", "43691", "87382", "174763",
        "349526", "699051", "1398102", "2796203", "5592406", "11184811",
        "22369622", "44739243", "89478486", "178956971", "357913942",
        "715827883", "1431655766", "2863311531", "5726623062", "11453246123",
        "22906492246", "45812984491", "91625968982", "183251937963"}},
      {"A011782",
       {"1", "1", "2", "4", "8", "16", "32", "64", "128", "256", "512",
        "1024", "2048", "4096", "8192", "16384", "32768", "65536", "131072",
        "262144", "524288", "1048576", "2097152", "4194304", "8388608",
        "16777216", "33554432", "67108864", "134217728", "268435456",
        "536870912", "1073741824", "2147483648", "4294967296", "8589934592",
        "17179869184", "34359738368", "68719476736", "137438953472",
        "274877906944"}},
      {"A016116",
       {"1", "1", "2", "2", "4", "4", "8", "8", "16", "16", "32", "32", "64",
        "64", "128", "128", "256", "256", "512", "512", "1024", "1024",
        "2048", "2048", "4096", "4096", "8192", "8192", "16384", "16384",
        "32768", "32768", "65536", "65536", "131072", "131072", "262144",
        "262144", "524288", "524288"}},
      {"A028495",
       {"1", "1", "2", "3", "6", "10", "19", "33", "61", "108", "197", "352",
        "638", "1145", "2069", "3721", "6714", "12087", "21794", "39254",
        "70755", "127469", "229725", "413908", "745889", "1343980",
        "2421850", "4363921", "7863641", "14169633", "25532994", "46008619",
        "82904974", "149389218", "269190547", "485064009", "874055885",
        "1574993356", "2838041117", "5113971944"}},
      {"A030436",
       {"1", "1", "2", "3", "6", "10", "20", "34", "68", "116", "232", "396",
        "792", "1352", "2704", "4616", "9232", "15760", "31520", "53808",
        "107616", "183712", "367424", "627232", "1254464", "2141504",
        "4283008", "7311552", "14623104", "24963200", "49926400", "85229696",
        "170459392", "290992384", "581984768", "993510144", "1987020288",
        "3392055808", "6784111616", "11581202944"}},
      {"A061551",
       {"1", "1", "2", "3", "6", "10", "20", "35", "69", "124", "241", "440",
        "846", "1560", "2977", "5525", "10490", "19551", "36994", "69142",
        "130532", "244419", "460737", "863788", "1626629", "3052100",
        "5743674", "10782928", "20283121", "38092457", "71632290",
        "134560491", "252989326", "475313762", "893528468", "1678930611",
        "3155899165", "5930320300", "11146628105", "20946860064"}},
      {"A061554",
       {"1", "1", "1", "2", "1", "1", "3", "3", "1", "1", "6", "4", "4", "1",
        "1", "10", "10", "5", "5", "1", "1", "20", "15", "15", "6", "6", "1",
        "1", "35", "35", "21", "21", "7", "7", "1", "1", "70", "56", "56",
        "28", "28", "8", "8", "1", "1"}},
      {"A099163",
       {"1", "1", "2", "3", "7", "12", "27", "49", "106", "199", "419",
        "804", "1663", "3237", "6618", "13003", "26383", "52156", "105299",
        "209001", "420586", "836991", "1680747", "3350548", "6718807",
        "13408957", "26864282", "53653539", "107428471", "214660524",
        "429638859", "858763489", "1718359018", "3435371767", "6872921843",
        "13742319108", "27490341103", "54971454741", "109957839834",
        "219891521851"}},
      {"A178381",
       {"1", "1", "2", "3", "6", "10", "20", "35", "70", "125", "250", "450",
        "900", "1625", "3250", "5875", "11750", "21250", "42500", "76875",
        "153750", "278125", "556250", "1006250", "2012500", "3640625",
        "7281250", "13171875", "26343750", "47656250", "95312500",
        "172421875", "344843750", "623828125", "1247656250", "2257031250",
        "4514062500", "8166015625", "16332031250", "29544921875"}},
      {"A182522",
       {"1", "1", "2", "3", "6", "9", "18", "27", "54", "81", "162", "243",
        "486", "729", "1458", "2187", "4374", "6561", "13122", "19683",
        "39366", "59049", "118098", "177147", "354294", "531441", "1062882",
        "1594323", "3188646", "4782969", "9565938", "14348907", "28697814",
        "43046721", "86093442", "129140163", "258280326", "387420489",
        "774840978", "1162261467"}},
  };
  return fixtures;
}

}  // namespace stripcomb
