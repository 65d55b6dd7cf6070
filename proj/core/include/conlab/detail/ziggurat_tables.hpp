#pragma once

#include <cstdint>

namespace conlab::detail {

// 256-layer ziggurat tables for the standard normal density with
// tail start r = 3.6541528853610088 and layer area
// v = 0.00492867323399708743, magnitudes scaled to 2^53.  Generated
// from the layer recursion x_{i} = sqrt(-2 log(v / x_{i+1} +
// exp(-x_{i+1}^2 / 2))) and frozen as exact literals.

inline constexpr std::uint64_t kZigK[256] = {
    0x001de67b004b492dULL, 0x0000000000000000ULL, 0x0018117d31dceda9ULL, 0x001b46a9f5718390ULL,
    0x001ca3ecfd7f0db7ULL, 0x001d64abd3a50a34ULL, 0x001dde9702fba83aULL, 0x001e328e15f329d5ULL,
    0x001e6fdac3fe8f2fULL, 0x001e9e8d2ac17e9eULL, 0x001ec34bc836a441ULL, 0x001ee0f4eaa6a838ULL,
    0x001ef965d8501a85ULL, 0x001f0de218c6521cULL, 0x001f1f4caf05fba8ULL, 0x001f2e498e9b5c5fULL,
    0x001f3b520fb7ad76ULL, 0x001f46c1eb03bf78ULL, 0x001f50dfbcb6687cULL, 0x001f59e2c1a67f45ULL,
    0x001f61f6ce314bf0ULL, 0x001f693f1aa6c702ULL, 0x001f6fd846cddd8eULL, 0x001f75d9d343ad77ULL,
    0x001f7b573a07fd9dULL, 0x001f8060c1fec086ULL, 0x001f8504206f2e47ULL, 0x001f894cf5c4a2feULL,
    0x001f8d452ef5c937ULL, 0x001f90f552511b70ULL, 0x001f9464bc97ac63ULL, 0x001f9799d204369fULL,
    0x001f9a9a25f064edULL, 0x001f9d6a9b1fcb78ULL, 0x001fa00f7e3b8574ULL, 0x001fa28c9bad7d9cULL,
    0x001fa4e551c5dd1eULL, 0x001fa71c9fe18757ULL, 0x001fa93533215ea0ULL, 0x001fab31712414d9ULL,
    0x001fad13811d2a89ULL, 0x001faedd5391c789ULL, 0x001fb090a8f60960ULL, 0x001fb22f175a510aULL,
    0x001fb3ba0f4f53f6ULL, 0x001fb532e020b5beULL, 0x001fb69abb805537ULL, 0x001fb7f2b8b7f2e5ULL,
    0x001fb93bd7732e84ULL, 0x001fba770230df06ULL, 0x001fbba51068592cULL, 0x001fbcc6c86d390eULL,
    0x001fbddce11a9d1cULL, 0x001fbee8034d6310ULL, 0x001fbfe8cb33d561ULL, 0x001fc0dfc97844f7ULL,
    0x001fc1cd844b3fefULL, 0x001fc2b278516c02ULL, 0x001fc38f19787ac3ULL, 0x001fc463d3b6350aULL,
    0x001fc5310bb432feULL, 0x001fc5f71f6a7f08ULL, 0x001fc6b666ab16b3ULL, 0x001fc76f339ffc94ULL,
    0x001fc821d33d575aULL, 0x001fc8ce8da8eae1ULL, 0x001fc975a6980f49ULL, 0x001fca175da526f5ULL,
    0x001fcab3ee9d75b1ULL, 0x001fcb4b91c82100ULL, 0x001fcbde7c270a05ULL, 0x001fcc6cdfb21df8ULL,
    0x001fccf6eb8da80eULL, 0x001fcd7ccc3c2086ULL, 0x001fcdfeabcbe728ULL, 0x001fce7cb2014b57ULL,
    0x001fcef7047d39d9ULL, 0x001fcf6dc6e0debaULL, 0x001fcfe11aee820dULL, 0x001fd05120a7deafULL,
    0x001fd0bdf66a2c1cULL, 0x001fd127b9080e7cULL, 0x001fd18e83e19b3cULL, 0x001fd1f270fa9bbcULL,
    0x001fd253990f3416ULL, 0x001fd2b213a70fbdULL, 0x001fd30df7273339ULL, 0x001fd36758e28eccULL,
    0x001fd3be4d296bb6ULL, 0x001fd412e757cb0eULL, 0x001fd46539e2cb69ULL, 0x001fd4b556652884ULL,
    0x001fd5034daae668ULL, 0x001fd54f2fbc381dULL, 0x001fd5990be7b086ULL, 0x001fd5e0f0cbcac9ULL,
    0x001fd626ec5fd67dULL, 0x001fd66b0bfc52f7ULL, 0x001fd6ad5c62c3d2ULL, 0x001fd6ede9c50865ULL,
    0x001fd72cbfcc3e9fULL, 0x001fd769e99f3979ULL, 0x001fd7a571e89226ULL, 0x001fd7df62dc5b0aULL,
    0x001fd817c63d7a66ULL, 0x001fd84ea562b2c4ULL, 0x001fd884093b5e48ULL, 0x001fd8b7fa53e1d5ULL,
    0x001fd8ea80d9dc96ULL, 0x001fd91ba4a0181cULL, 0x001fd94b6d223cdbULL, 0x001fd979e1884ebbULL,
    0x001fd9a708a9f4f0ULL, 0x001fd9d2e9119030ULL, 0x001fd9fd88ff223eULL, 0x001fda26ee6b0925ULL,
    0x001fda4f1f0890dfULL, 0x001fda7620485d76ULL, 0x001fda9bf75aafbdULL, 0x001fdac0a931869fULL,
    0x001fdae43a829ebaULL, 0x001fdb06afc951f3ULL, 0x001fdb280d485885ULL, 0x001fdb48570b6cffULL,
    0x001fdb6790e8d463ULL, 0x001fdb85be82cba3ULL, 0x001fdba2e348dba7ULL, 0x001fdbbf027914aaULL,
    0x001fdbda1f213209ULL, 0x001fdbf43c1fa735ULL, 0x001fdc0d5c24969aULL, 0x001fdc2581b2b321ULL,
    0x001fdc3caf200cd8ULL, 0x001fdc52e696c963ULL, 0x001fdc682a15c895ULL, 0x001fdc7c7b71359aULL,
    0x001fdc8fdc53050bULL, 0x001fdca24e3b6032ULL, 0x001fdcb3d280fdabULL, 0x001fdcc46a516787ULL,
    0x001fdcd416b12f10ULL, 0x001fdce2d87c0e26ULL, 0x001fdcf0b064f636ULL, 0x001fdcfd9ef60caaULL,
    0x001fdd09a490949fULL, 0x001fdd14c16cc5c1ULL, 0x001fdd1ef5998fe1ULL, 0x001fdd2840fc4af5ULL,
    0x001fdd30a3505318ULL, 0x001fdd381c268ffaULL, 0x001fdd3eaae4e72eULL, 0x001fdd444ec598a4ULL,
    0x001fdd4906d684a1ULL, 0x001fdd4cd1f85a2fULL, 0x001fdd4faeddad41ULL, 0x001fdd519c09f365ULL,
    0x001fdd5297d065caULL, 0x001fdd52a052c773ULL, 0x001fdd51b3800e12ULL, 0x001fdd4fcf12ec00ULL,
    0x001fdd4cf09039a2ULL, 0x001fdd4915453c60ULL, 0x001fdd443a45c910ULL, 0x001fdd3e5c6a3fa8ULL,
    0x001fdd37784d5dbdULL, 0x001fdd2f8a49e528ULL, 0x001fdd268e7813d5ULL, 0x001fdd1c80aae98fULL,
    0x001fdd115c6d3858ULL, 0x001fdd051cfe7b61ULL, 0x001fdcf7bd4f7078ULL, 0x001fdce937fe6f68ULL,
    0x001fdcd987537a28ULL, 0x001fdcc8a53c006cULL, 0x001fdcb68b465080ULL, 0x001fdca3329caedcULL,
    0x001fdc8e94000d0dULL, 0x001fdc78a7c25810ULL, 0x001fdc6165c05521ULL, 0x001fdc48c55b037cULL,
    0x001fdc2ebd707829ULL, 0x001fdc1344542804ULL, 0x001fdbf64fc6930eULL, 0x001fdbd7d4ec4250ULL,
    0x001fdbb7c8440874ULL, 0x001fdb961d9c7320ULL, 0x001fdb72c8085962ULL, 0x001fdb4db9d2710fULL,
    0x001fdb26e46fd296ULL, 0x001fdafe38714feaULL, 0x001fdad3a5737fd4ULL, 0x001fdaa71a0d5b7dULL,
    0x001fda7883bd47c5ULL, 0x001fda47ced45f2eULL, 0x001fda14e65fcc09ULL, 0x001fd9dfb40ffbe8ULL,
    0x001fd9a8201d6ef3ULL, 0x001fd96e112adceaULL, 0x001fd9316c246106ULL, 0x001fd8f2141b5275ULL,
    0x001fd8afea1e6381ULL, 0x001fd86acd0d9249ULL, 0x001fd822996965efULL, 0x001fd7d7291cdf28ULL,
    0x001fd78853416ca9ULL, 0x001fd735ebdc193fULL, 0x001fd6dfc3930a0cULL, 0x001fd685a75a3ec3ULL,
    0x001fd62760165a20ULL, 0x001fd5c4b234055aULL, 0x001fd55d5d324436ULL, 0x001fd4f11b1dc5d7ULL,
    0x001fd47f9ffae754ULL, 0x001fd408991bb378ULL, 0x001fd38bac5eabfeULL, 0x001fd30877528ed1ULL,
    0x001fd27e8e3a8ddaULL, 0x001fd1ed7aed8b37ULL, 0x001fd154bb89d157ULL, 0x001fd0b3c0f5635fULL,
    0x001fd009ed215209ULL, 0x001fcf5691046707ULL, 0x001fce98ea3ed4d3ULL, 0x001fcdd02055438cULL,
    0x001fccfb416d5738ULL, 0x001fcc193e706083ULL, 0x001fcb28e671ee0cULL, 0x001fca28e12ee487ULL,
    0x001fc917a86de835ULL, 0x001fc7f37ffa3bf3ULL, 0x001fc6ba6bdd62bbULL, 0x001fc56a245fc97dULL,
    0x001fc4000732aa2fULL, 0x001fc27904f105a7ULL, 0x001fc0d189dcceddULL, 0x001fbf056056e2d1ULL,
    0x001fbd0f8afdfccdULL, 0x001fbaea138c7771ULL, 0x001fb88dca537d9aULL, 0x001fb5f1f05c0477ULL,
    0x001fb30bc3657457ULL, 0x001fafcdde919d72ULL, 0x001fac275b7ac97aULL, 0x001fa80293c5df82ULL,
    0x001fa3434f698eb0ULL, 0x001f9dc408ec3e8aULL, 0x001f9751b0bc22a6ULL, 0x001f8fa4dd9a597cULL,
    0x001f86565e3c44feULL, 0x001f7acb03816f81ULL, 0x001f6c0d8800a755ULL, 0x001f5880b0544fa5ULL,
    0x001f3d2e3c0289a5ULL, 0x001f13f4914839ecULL, 0x001ecd8befe05d36ULL, 0x001e34b496663202ULL,
};

inline constexpr double kZigW[256] = {
    0x1.f493b7816760fp-52, 0x1.b8d0be3c46339p-56, 0x1.250af3c1a57b5p-55, 0x1.57cb9383693a8p-55,
    0x1.801fce8246e14p-55, 0x1.a230c2e432bbp-55, 0x1.c004d2f2fdb2dp-55, 0x1.dac2f5a6cc2c1p-55,
    0x1.f32482d45ce93p-55, 0x1.04d32278b7c2ep-54, 0x1.0f5053aff5621p-54, 0x1.192a6973e5ee9p-54,
    0x1.227a28f776c2fp-54, 0x1.2b52e38614d29p-54, 0x1.33c3fc05525bdp-54, 0x1.3bd9ec1a06091p-54,
    0x1.439ef8dfd6363p-54, 0x1.4b1bb363bdcecp-54, 0x1.525756218c5d8p-54, 0x1.59580a705d353p-54,
    0x1.60231cfd79473p-54, 0x1.66bd261a1a13bp-54, 0x1.6d2a291fe38b3p-54, 0x1.736dad3453924p-54,
    0x1.798ad10b17742p-54, 0x1.7f845ad454d8cp-54, 0x1.855cc53416d7fp-54, 0x1.8b1649e79e3b9p-54,
    0x1.90b2ea94d4635p-54, 0x1.96347822a9e7ap-54, 0x1.9b9c98e374d49p-54, 0x1.a0eccdca3372ep-54,
    0x1.a62676d7664f1p-54, 0x1.ab4ad6e0eb4fdp-54, 0x1.b05b16d121245p-54, 0x1.b55848741265ap-54,
    0x1.ba4368e5151a7p-54, 0x1.bf1d62abe3a95p-54, 0x1.c3e70f9580d08p-54, 0x1.c8a13a530feedp-54,
    0x1.cd4c9fe70ef53p-54, 0x1.d1e9f0e7f8516p-54, 0x1.d679d29e2f1b4p-54, 0x1.dafce0022900fp-54,
    0x1.df73aa9f05218p-54, 0x1.e3debb5d1ce15p-54, 0x1.e83e933795341p-54, 0x1.ec93abdf86b14p-54,
    0x1.f0de784ef4e4fp-54, 0x1.f51f654d7e674p-54, 0x1.f956d9e86cb3dp-54, 0x1.fd8537df925c1p-54,
    0x1.00d56e041b22bp-53, 0x1.02e40f5390e81p-53, 0x1.04eea9e16267fp-53, 0x1.06f565b722222p-53,
    0x1.08f86907177a1p-53, 0x1.0af7d84bbe621p-53, 0x1.0cf3d664b52fcp-53, 0x1.0eec84b15904dp-53,
    0x1.10e2032949f2bp-53, 0x1.12d4707309a4ep-53, 0x1.14c3e9f8e1d1ap-53, 0x1.16b08bfc3ad37p-53,
    0x1.189a71a786885p-53, 0x1.1a81b51edfd0ap-53, 0x1.1c666f8f7bb78p-53, 0x1.1e48b93e065fdp-53,
    0x1.2028a9940338cp-53, 0x1.2206572c45aebp-53, 0x1.23e1d7de9583p-53, 0x1.25bb40ca90216p-53,
    0x1.2792a661d6a9cp-53, 0x1.29681c7196f36p-53, 0x1.2b3bb62b7c7edp-53, 0x1.2d0d862e1525bp-53,
    0x1.2edd9e8cb4485p-53, 0x1.30ac10d6de4b9p-53, 0x1.3278ee1f455f8p-53, 0x1.344447025fc4ap-53,
    0x1.360e2bac9f15ap-53, 0x1.37d6abe04f7c8p-53, 0x1.399dd6fb25296p-53, 0x1.3b63bbfb7de05p-53,
    0x1.3d2869855bfafp-53, 0x1.3eebede71fd1bp-53, 0x1.40ae571e041d1p-53, 0x1.426fb2da6187cp-53,
    0x1.44300e83bd582p-53, 0x1.45ef773ca6cf6p-53, 0x1.47adf9e666988p-53, 0x1.496ba32483636p-53,
    0x1.4b287f601e916p-53, 0x1.4ce49acb2ba45p-53, 0x1.4ea0016384f1bp-53, 0x1.505abef5dff22p-53,
    0x1.5214df20a35c3p-53, 0x1.53ce6d56a115cp-53, 0x1.558774e1b5e77p-53, 0x1.574000e550bc7p-53,
    0x1.58f81c60e3201p-53, 0x1.5aafd2323c8e1p-53, 0x1.5c672d17d215fp-53, 0x1.5e1e37b2f3b8cp-53,
    0x1.5fd4fc89f0d85p-53, 0x1.618b860a2cfa4p-53, 0x1.6341de8a26114p-53, 0x1.64f8104b6d70cp-53,
    0x1.66ae257c948p-53, 0x1.6864283b0e35p-53, 0x1.6a1a229506554p-53, 0x1.6bd01e8b2f6e6p-53,
    0x1.6d86261288702p-53, 0x1.6f3c43161ac88p-53, 0x1.70f27f78b1da1p-53, 0x1.72a8e5168c9fcp-53,
    0x1.745f7dc70a491p-53, 0x1.7616535e52952p-53, 0x1.77cd6faefaaf9p-53, 0x1.7984dc8ba74bfp-53,
    0x1.7b3ca3c8acbafp-53, 0x1.7cf4cf3dadb19p-53, 0x1.7ead68c73977bp-53, 0x1.80667a486a329p-53,
    0x1.82200dac83ff4p-53, 0x1.83da2ce895906p-53, 0x1.8594e1fd1b02p-53, 0x1.875036f7a399ap-53,
    0x1.890c35f47b271p-53, 0x1.8ac8e92057bf5p-53, 0x1.8c865aba0c8bbp-53, 0x1.8e449514426b2p-53,
    0x1.9003a29737285p-53, 0x1.91c38dc2840a7p-53, 0x1.9384612eec8c5p-53, 0x1.95462790360bap-53,
    0x1.9708ebb709485p-53, 0x1.98ccb892de92fp-53, 0x1.9a919933f5922p-53, 0x1.9c5798cd598f3p-53,
    0x1.9e1ec2b6f343cp-53, 0x1.9fe7226fa92d8p-53, 0x1.a1b0c39f8f782p-53, 0x1.a37bb21a289abp-53,
    0x1.a547f9e0b7d37p-53, 0x1.a715a724a6bb2p-53, 0x1.a8e4c649ff3a8p-53, 0x1.aab563e9fb3dp-53,
    0x1.ac878cd5ab8f2p-53, 0x1.ae5b4e18b76b7p-53, 0x1.b030b4fc364f6p-53, 0x1.b207cf09a5c92p-53,
    0x1.b3e0aa0dfd091p-53, 0x1.b5bb541ce01edp-53, 0x1.b797db93f4e6ap-53, 0x1.b9764f1e5bcd7p-53,
    0x1.bb56bdb84eb5fp-53, 0x1.bd3936b2e86eap-53, 0x1.bf1dc9b817521p-53, 0x1.c10486cebdd94p-53,
    0x1.c2ed7e5f04177p-53, 0x1.c4d8c136dd4bcp-53, 0x1.c6c6608ec4ef9p-53, 0x1.c8b66e0eb6e5ep-53,
    0x1.caa8fbd366b45p-53, 0x1.cc9e1c73b9f7dp-53, 0x1.ce95e3068a977p-53, 0x1.d0906328b59p-53,
    0x1.d28db1037b904p-53, 0x1.d48de1533907cp-53, 0x1.d691096e7bba8p-53, 0x1.d8973f4d7c67ap-53,
    0x1.daa0999203994p-53, 0x1.dcad2f8fc148p-53, 0x1.debd19551f9f7p-53, 0x1.e0d06fb499e2ap-53,
    0x1.e2e74c4ea1353p-53, 0x1.e501c99c19e34p-53, 0x1.e72002f97cb1fp-53, 0x1.e94214b2a8c53p-53,
    0x1.eb681c0f73c9ep-53, 0x1.ed9237610751dp-53, 0x1.efc086101bad9p-53, 0x1.f1f328ac2219dp-53,
    0x1.f42a40fb71c36p-53, 0x1.f665f20c8d07dp-53, 0x1.f8a66048966e3p-53, 0x1.faebb1870f26bp-53,
    0x1.fd360d22fb77dp-53, 0x1.ff859c118c64ep-53, 0x1.00ed447d388bcp-52, 0x1.021a8028fb1b4p-52,
    0x1.034a983a8eb3dp-52, 0x1.047da4e3ede7fp-52, 0x1.05b3bf6ad9c5bp-52, 0x1.06ed023a70f6bp-52,
    0x1.082988f63173fp-52, 0x1.0969708e88ba2p-52, 0x1.0aacd7571aa37p-52, 0x1.0bf3dd1eebdep-52,
    0x1.0d3ea34aa26eep-52, 0x1.0e8d4cf114f76p-52, 0x1.0fdffefa689bfp-52, 0x1.1136e04205a6fp-52,
    0x1.129219bbb4789p-52, 0x1.13f1d69c3f3e7p-52, 0x1.15564486018dbp-52, 0x1.16bf93b9dd9b9p-52,
    0x1.182df74d1fd4cp-52, 0x1.19a1a564ed6bdp-52, 0x1.1b1ad777f1ac6p-52, 0x1.1c99ca97191f2p-52,
    0x1.1e1ebfbe499bdp-52, 0x1.1fa9fc2e2c4abp-52, 0x1.213bc9d04b853p-52, 0x1.22d477a6fbfe7p-52,
    0x1.24745a4ac8844p-52, 0x1.261bcc7764527p-52, 0x1.27cb2faa8459cp-52, 0x1.2982ecd76fb0ep-52,
    0x1.2b4375329f711p-52, 0x1.2d0d43196c87fp-52, 0x1.2ee0db1a96606p-52, 0x1.30becd2569c28p-52,
    0x1.32a7b5e689208p-52, 0x1.349c405ae0033p-52, 0x1.369d27a3395fbp-52, 0x1.38ab392562ef1p-52,
    0x1.3ac7570ae770ep-52, 0x1.3cf27b316f2e7p-52, 0x1.3f2dbaa60e2e4p-52, 0x1.417a49cb9d478p-52,
    0x1.43d9815544d62p-52, 0x1.464ce44a72915p-52, 0x1.48d62759c32eep-52, 0x1.4b7739d6b498dp-52,
    0x1.4e3250dcd789ep-52, 0x1.5109f53e99c14p-52, 0x1.54011523a6e4ep-52, 0x1.571b1a94ad462p-52,
    0x1.5a5c08b717e5ep-52, 0x1.5dc8a243ac1c3p-52, 0x1.61669cf860f55p-52, 0x1.653ce7b005c3cp-52,
    0x1.69540be9fd762p-52, 0x1.6db6b8d09d426p-52, 0x1.72728f05f6c84p-52, 0x1.779955608f928p-52,
    0x1.7d42df4d6c1b4p-52, 0x1.839030529e5e1p-52, 0x1.8ab0fbfaa705fp-52, 0x1.92ee0946f39a5p-52,
    0x1.9cbee01404dbbp-52, 0x1.a8fdc78946edep-52, 0x1.b981f3878f7bp-52, 0x1.d3bb48209ad33p-52,
};

inline constexpr double kZigF[256] = {
    0x1p+0, 0x1.f446ac97cf782p-1, 0x1.eb7545b6f2286p-1, 0x1.e3f11e02a1b21p-1,
    0x1.dd36fa706d4d4p-1, 0x1.d709206598cc6p-1, 0x1.d144978a2cbc8p-1, 0x1.cbd33a8a8c795p-1,
    0x1.c6a5eceaafde1p-1, 0x1.c1b1cd9f02ef4p-1, 0x1.bceeb4ee34174p-1, 0x1.b85653a914cfp-1,
    0x1.b3e3a823628c6p-1, 0x1.af92a3f6e299ap-1, 0x1.ab5fef17b5c36p-1, 0x1.a748bd551f81ep-1,
    0x1.a34aafdf6d50ap-1, 0x1.9f63bee663e2cp-1, 0x1.9b9228d251db5p-1, 0x1.97d4657628b4ap-1,
    0x1.94291c21c848ep-1, 0x1.908f1bd3275bp-1, 0x1.8d0554fe70977p-1, 0x1.898ad48bbd88ap-1,
    0x1.861ebfc38b131p-1, 0x1.82c050f57bf2dp-1, 0x1.7f6ed4b21cdfcp-1, 0x1.7c29a779d4f2dp-1,
    0x1.78f033ca1937dp-1, 0x1.75c1f0771b6fcp-1, 0x1.729e5f44047dfp-1, 0x1.6f850baeb5207p-1,
    0x1.6c7589e642e1p-1, 0x1.696f75e520b3fp-1, 0x1.667272a93afe4p-1, 0x1.637e29855d5a1p-1,
    0x1.609249880ecdp-1, 0x1.5dae86f4bc2cfp-1, 0x1.5ad29acc91dp-1, 0x1.57fe4264d4b2ep-1,
    0x1.55313f08e5921p-1, 0x1.526b55a6625p-1, 0x1.4fac4e8216bf4p-1, 0x1.4cf3f4f4a01cp-1,
    0x1.4a42172dd02fcp-1, 0x1.479685fdffe29p-1, 0x1.44f114a49e232p-1, 0x1.425198a36094dp-1,
    0x1.3fb7e995902aap-1, 0x1.3d23e10afd696p-1, 0x1.3a955a6636fd8p-1, 0x1.380c32bdaa183p-1,
    0x1.358848bf5ef85p-1, 0x1.33097c970d6cbp-1, 0x1.308fafd64d387p-1, 0x1.2e1ac55ead494p-1,
    0x1.2baaa14d82c07p-1, 0x1.293f28e9461f4p-1, 0x1.26d84290597f5p-1, 0x1.2475d5a916cbep-1,
    0x1.2217ca9308766p-1, 0x1.1fbe0a99323d6p-1, 0x1.1d687fe552569p-1, 0x1.1b17157405b63p-1,
    0x1.18c9b709bc4fcp-1, 0x1.168051286c0e7p-1, 0x1.143ad105f2f0fp-1, 0x1.11f924831a318p-1,
    0x1.0fbb3a232db66p-1, 0x1.0d8101041c36cp-1, 0x1.0b4a68d7158fap-1, 0x1.091761d99db52p-1,
    0x1.06e7dccf0b893p-1, 0x1.04bbcafa6ba1cp-1, 0x1.02931e18bfbaep-1, 0x1.006dc85b942e2p-1,
    0x1.fc9778c7cab19p-2, 0x1.f859da7a9eb89p-2, 0x1.f4229cb306302p-2, 0x1.eff1a717f74fep-2,
    0x1.ebc6e20be0222p-2, 0x1.e7a236a4fa3fdp-2, 0x1.e3838ea607931p-2, 0x1.df6ad47771533p-2,
    0x1.db57f320c2f5fp-2, 0x1.d74ad6427b46cp-2, 0x1.d3436a102e44ep-2, 0x1.cf419b4af2cd7p-2,
    0x1.cb45573c17752p-2, 0x1.c74e8bb01a47cp-2, 0x1.c35d26f1df71dp-2, 0x1.bf7117c623232p-2,
    0x1.bb8a4d672336ap-2, 0x1.b7a8b7807d6b8p-2, 0x1.b3cc462b3f33p-2, 0x1.aff4e9ea24488p-2,
    0x1.ac2293a6017a8p-2, 0x1.a85534aa59367p-2, 0x1.a48cbea217917p-2, 0x1.a0c9239473afp-2,
    0x1.9d0a55e1f487dp-2, 0x1.9950484197357p-2, 0x1.959aedbe1501bp-2, 0x1.91ea39b34799bp-2,
    0x1.8e3e1fcba9d9dp-2, 0x1.8a9693fdf3c16p-2, 0x1.86f38a8ad034fp-2, 0x1.8354f7faab483p-2,
    0x1.7fbad11b97ddp-2, 0x1.7c250aff4b789p-2, 0x1.78939af92f3e3p-2, 0x1.7506769c85108p-2,
    0x1.717d93ba9fe9p-2, 0x1.6df8e8612e81ap-2, 0x1.6a786ad8977c3p-2, 0x1.66fc11a2663bap-2,
    0x1.6383d377c7b26p-2, 0x1.600fa74816717p-2, 0x1.5c9f8437754d4p-2, 0x1.5933619d77f91p-2,
    0x1.55cb3703d901ap-2, 0x1.5266fc253c954p-2, 0x1.4f06a8ebff94ap-2, 0x1.4baa3571126aep-2,
    0x1.485199fadf338p-2, 0x1.44fccefc3abbcp-2, 0x1.41abcd135ff36p-2, 0x1.3e5e8d08f5659p-2,
    0x1.3b1507cf1c591p-2, 0x1.37cf3680893c5p-2, 0x1.348d125fa5057p-2, 0x1.314e94d5b7357p-2,
    0x1.2e13b77218302p-2, 0x1.2adc73e96b9eep-2, 0x1.27a8c414e29a9p-2, 0x1.2478a1f18559p-2,
    0x1.214c079f84225p-2, 0x1.1e22ef618f51ep-2, 0x1.1afd539c362ddp-2, 0x1.17db2ed54c5fep-2,
    0x1.14bc7bb355e07p-2, 0x1.11a134fcf925p-2, 0x1.0e8955987768p-2, 0x1.0b74d88b2ae2bp-2,
    0x1.0863b8f90ad1ep-2, 0x1.0555f2243525cp-2, 0x1.024b7f6c7db9ep-2, 0x1.fe88b89e05f43p-3,
    0x1.f88108cb8faf9p-3, 0x1.f27fe6cea5edbp-3, 0x1.ec854a4ca5f9ap-3, 0x1.e6912b228fd83p-3,
    0x1.e0a3816462f81p-3, 0x1.dabc455c84b64p-3, 0x1.d4db6f8b30a09p-3, 0x1.cf00f8a5f25ecp-3,
    0x1.c92cd997292ep-3, 0x1.c35f0b7d94e43p-3, 0x1.bd9787abec712p-3, 0x1.b7d647a87dd93p-3,
    0x1.b21b452cd7a9fp-3, 0x1.ac667a257bee9p-3, 0x1.a6b7e0b19cae5p-3, 0x1.a10f7322e2031p-3,
    0x1.9b6d2bfd39ddep-3, 0x1.95d105f6b193dp-3, 0x1.903afbf759516p-3, 0x1.8aab0919319a2p-3,
    0x1.852128a82301ep-3, 0x1.7f9d5622004ffp-3, 0x1.7a1f8d3693456p-3, 0x1.74a7c9c7b4487p-3,
    0x1.6f3607e96d3a8p-3, 0x1.69ca43e227ca7p-3, 0x1.64647a2ae79a3p-3, 0x1.5f04a76f909bfp-3,
    0x1.59aac88f3a0f3p-3, 0x1.5456da9c8e97ep-3, 0x1.4f08dade39ed2p-3, 0x1.49c0c6cf64b07p-3,
    0x1.447e9c203f07fp-3, 0x1.3f4258b69aa2dp-3, 0x1.3a0bfaae94e43p-3, 0x1.34db805b51fbbp-3,
    0x1.2fb0e847c9c76p-3, 0x1.2a8c3137a771p-3, 0x1.256d5a283cc92p-3, 0x1.205462518a7fdp-3,
    0x1.1b4149275e6f8p-3, 0x1.16340e5a8950cp-3, 0x1.112cb1da2d459p-3, 0x1.0c2b33d526d51p-3,
    0x1.072f94bb9211bp-3, 0x1.0239d5406dcc1p-3, 0x1.fa93ecb6bdd63p-4, 0x1.f0bff2952c55cp-4,
    0x1.e6f7bf29b58a7p-4, 0x1.dd3b561779807p-4, 0x1.d38abb9be3d7fp-4, 0x1.c9e5f493c1bd7p-4,
    0x1.c04d0680bb411p-4, 0x1.b6bff78f38268p-4, 0x1.ad3ece9cb92a9p-4, 0x1.a3c9933eafb45p-4,
    0x1.9a604dc9df024p-4, 0x1.9103075a5320bp-4, 0x1.87b1c9dbfb60bp-4, 0x1.7e6ca013f79f3p-4,
    0x1.753395aaa98p-4, 0x1.6c06b7369cd49p-4, 0x1.62e612485cc8ap-4, 0x1.59d1b5774e295p-4,
    0x1.50c9b06faa429p-4, 0x1.47ce1401b971fp-4, 0x1.3edef23270c2p-4, 0x1.35fc5e4d9aca3p-4,
    0x1.2d266cf9b9be7p-4, 0x1.245d344dd7513p-4, 0x1.1ba0cbe97edb2p-4, 0x1.12f14d0f2788bp-4,
    0x1.0a4ed2c15f3cdp-4, 0x1.01b979e313f04p-4, 0x1.f262c2b6d1ca6p-5, 0x1.e16d547b2f99dp-5,
    0x1.d092efeae932ap-5, 0x1.bfd3e0f28c5b3p-5, 0x1.af3079038f4cap-5, 0x1.9ea90f929e499p-5,
    0x1.8e3e02a693eccp-5, 0x1.7defb77afaa3cp-5, 0x1.6dbe9b3994d8bp-5, 0x1.5dab23cf32517p-5,
    0x1.4db5d0e1198cbp-5, 0x1.3ddf2ce995a6ap-5, 0x1.2e27ce83e5a8p-5, 0x1.1e9059f1fcafcp-5,
    0x1.0f1982e96dab3p-5, 0x1.ff881d7194ff8p-6, 0x1.e121adb832bbdp-6, 0x1.c301983cd9d99p-6,
    0x1.a529f4e2375cdp-6, 0x1.879d1b6014061p-6, 0x1.6a5daf40c3479p-6, 0x1.4d6eaf2fc1b1cp-6,
    0x1.30d388dabbebcp-6, 0x1.14903346086cdp-6, 0x1.f152a4f737736p-7, 0x1.ba48d2750166ep-7,
    0x1.841040d8e186fp-7, 0x1.4eb96421b3178p-7, 0x1.1a59229957f35p-7, 0x1.ce160f8ece49p-8,
    0x1.69ea8d90d12f9p-8, 0x1.08a1f03b0ec3bp-8, 0x1.55f9f43c1e7bcp-9, 0x1.4a605b6b9f70fp-10,
};

}  // namespace conlab::detail
