// Generated by scripts/gen_unicode_tables.py from Python's unicodedata
// (UCD version 13.0.0). Do not edit by hand.

#include "synthline/unicode_tables.hpp"

namespace synthline::unitab {

const MapEntry kDecomp[] = {
    {0xC0u, 0u, 2u},
    {0xC1u, 2u, 2u},
    {0xC2u, 4u, 2u},
    {0xC3u, 6u, 2u},
    {0xC4u, 8u, 2u},
    {0xC5u, 10u, 2u},
    {0xC7u, 12u, 2u},
    {0xC8u, 14u, 2u},
    {0xC9u, 16u, 2u},
    {0xCAu, 18u, 2u},
    {0xCBu, 20u, 2u},
    {0xCCu, 22u, 2u},
    {0xCDu, 24u, 2u},
    {0xCEu, 26u, 2u},
    {0xCFu, 28u, 2u},
    {0xD1u, 30u, 2u},
    {0xD2u, 32u, 2u},
    {0xD3u, 34u, 2u},
    {0xD4u, 36u, 2u},
    {0xD5u, 38u, 2u},
    {0xD6u, 40u, 2u},
    {0xD9u, 42u, 2u},
    {0xDAu, 44u, 2u},
    {0xDBu, 46u, 2u},
    {0xDCu, 48u, 2u},
    {0xDDu, 50u, 2u},
    {0xE0u, 52u, 2u},
    {0xE1u, 54u, 2u},
    {0xE2u, 56u, 2u},
    {0xE3u, 58u, 2u},
    {0xE4u, 60u, 2u},
    {0xE5u, 62u, 2u},
    {0xE7u, 64u, 2u},
    {0xE8u, 66u, 2u},
    {0xE9u, 68u, 2u},
    {0xEAu, 70u, 2u},
    {0xEBu, 72u, 2u},
    {0xECu, 74u, 2u},
    {0xEDu, 76u, 2u},
    {0xEEu, 78u, 2u},
    {0xEFu, 80u, 2u},
    {0xF1u, 82u, 2u},
    {0xF2u, 84u, 2u},
    {0xF3u, 86u, 2u},
    {0xF4u, 88u, 2u},
    {0xF5u, 90u, 2u},
    {0xF6u, 92u, 2u},
    {0xF9u, 94u, 2u},
    {0xFAu, 96u, 2u},
    {0xFBu, 98u, 2u},
    {0xFCu, 100u, 2u},
    {0xFDu, 102u, 2u},
    {0xFFu, 104u, 2u},
    {0x100u, 106u, 2u},
    {0x101u, 108u, 2u},
    {0x102u, 110u, 2u},
    {0x103u, 112u, 2u},
    {0x104u, 114u, 2u},
    {0x105u, 116u, 2u},
    {0x106u, 118u, 2u},
    {0x107u, 120u, 2u},
    {0x108u, 122u, 2u},
    {0x109u, 124u, 2u},
    {0x10Au, 126u, 2u},
    {0x10Bu, 128u, 2u},
    {0x10Cu, 130u, 2u},
    {0x10Du, 132u, 2u},
    {0x10Eu, 134u, 2u},
    {0x10Fu, 136u, 2u},
    {0x112u, 138u, 2u},
    {0x113u, 140u, 2u},
    {0x114u, 142u, 2u},
    {0x115u, 144u, 2u},
    {0x116u, 146u, 2u},
    {0x117u, 148u, 2u},
    {0x118u, 150u, 2u},
    {0x119u, 152u, 2u},
    {0x11Au, 154u, 2u},
    {0x11Bu, 156u, 2u},
    {0x11Cu, 158u, 2u},
    {0x11Du, 160u, 2u},
    {0x11Eu, 162u, 2u},
    {0x11Fu, 164u, 2u},
    {0x120u, 166u, 2u},
    {0x121u, 168u, 2u},
    {0x122u, 170u, 2u},
    {0x123u, 172u, 2u},
    {0x124u, 174u, 2u},
    {0x125u, 176u, 2u},
    {0x128u, 178u, 2u},
    {0x129u, 180u, 2u},
    {0x12Au, 182u, 2u},
    {0x12Bu, 184u, 2u},
    {0x12Cu, 186u, 2u},
    {0x12Du, 188u, 2u},
    {0x12Eu, 190u, 2u},
    {0x12Fu, 192u, 2u},
    {0x130u, 194u, 2u},
    {0x134u, 196u, 2u},
    {0x135u, 198u, 2u},
    {0x136u, 200u, 2u},
    {0x137u, 202u, 2u},
    {0x139u, 204u, 2u},
    {0x13Au, 206u, 2u},
    {0x13Bu, 208u, 2u},
    {0x13Cu, 210u, 2u},
    {0x13Du, 212u, 2u},
    {0x13Eu, 214u, 2u},
    {0x143u, 216u, 2u},
    {0x144u, 218u, 2u},
    {0x145u, 220u, 2u},
    {0x146u, 222u, 2u},
    {0x147u, 224u, 2u},
    {0x148u, 226u, 2u},
    {0x14Cu, 228u, 2u},
    {0x14Du, 230u, 2u},
    {0x14Eu, 232u, 2u},
    {0x14Fu, 234u, 2u},
    {0x150u, 236u, 2u},
    {0x151u, 238u, 2u},
    {0x154u, 240u, 2u},
    {0x155u, 242u, 2u},
    {0x156u, 244u, 2u},
    {0x157u, 246u, 2u},
    {0x158u, 248u, 2u},
    {0x159u, 250u, 2u},
    {0x15Au, 252u, 2u},
    {0x15Bu, 254u, 2u},
    {0x15Cu, 256u, 2u},
    {0x15Du, 258u, 2u},
    {0x15Eu, 260u, 2u},
    {0x15Fu, 262u, 2u},
    {0x160u, 264u, 2u},
    {0x161u, 266u, 2u},
    {0x162u, 268u, 2u},
    {0x163u, 270u, 2u},
    {0x164u, 272u, 2u},
    {0x165u, 274u, 2u},
    {0x168u, 276u, 2u},
    {0x169u, 278u, 2u},
    {0x16Au, 280u, 2u},
    {0x16Bu, 282u, 2u},
    {0x16Cu, 284u, 2u},
    {0x16Du, 286u, 2u},
    {0x16Eu, 288u, 2u},
    {0x16Fu, 290u, 2u},
    {0x170u, 292u, 2u},
    {0x171u, 294u, 2u},
    {0x172u, 296u, 2u},
    {0x173u, 298u, 2u},
    {0x174u, 300u, 2u},
    {0x175u, 302u, 2u},
    {0x176u, 304u, 2u},
    {0x177u, 306u, 2u},
    {0x178u, 308u, 2u},
    {0x179u, 310u, 2u},
    {0x17Au, 312u, 2u},
    {0x17Bu, 314u, 2u},
    {0x17Cu, 316u, 2u},
    {0x17Du, 318u, 2u},
    {0x17Eu, 320u, 2u},
    {0x1A0u, 322u, 2u},
    {0x1A1u, 324u, 2u},
    {0x1AFu, 326u, 2u},
    {0x1B0u, 328u, 2u},
    {0x1CDu, 330u, 2u},
    {0x1CEu, 332u, 2u},
    {0x1CFu, 334u, 2u},
    {0x1D0u, 336u, 2u},
    {0x1D1u, 338u, 2u},
    {0x1D2u, 340u, 2u},
    {0x1D3u, 342u, 2u},
    {0x1D4u, 344u, 2u},
    {0x1D5u, 346u, 3u},
    {0x1D6u, 349u, 3u},
    {0x1D7u, 352u, 3u},
    {0x1D8u, 355u, 3u},
    {0x1D9u, 358u, 3u},
    {0x1DAu, 361u, 3u},
    {0x1DBu, 364u, 3u},
    {0x1DCu, 367u, 3u},
    {0x1DEu, 370u, 3u},
    {0x1DFu, 373u, 3u},
    {0x1E0u, 376u, 3u},
    {0x1E1u, 379u, 3u},
    {0x1E2u, 382u, 2u},
    {0x1E3u, 384u, 2u},
    {0x1E6u, 386u, 2u},
    {0x1E7u, 388u, 2u},
    {0x1E8u, 390u, 2u},
    {0x1E9u, 392u, 2u},
    {0x1EAu, 394u, 2u},
    {0x1EBu, 396u, 2u},
    {0x1ECu, 398u, 3u},
    {0x1EDu, 401u, 3u},
    {0x1EEu, 404u, 2u},
    {0x1EFu, 406u, 2u},
    {0x1F0u, 408u, 2u},
    {0x1F4u, 410u, 2u},
    {0x1F5u, 412u, 2u},
    {0x1F8u, 414u, 2u},
    {0x1F9u, 416u, 2u},
    {0x1FAu, 418u, 3u},
    {0x1FBu, 421u, 3u},
    {0x1FCu, 424u, 2u},
    {0x1FDu, 426u, 2u},
    {0x1FEu, 428u, 2u},
    {0x1FFu, 430u, 2u},
    {0x200u, 432u, 2u},
    {0x201u, 434u, 2u},
    {0x202u, 436u, 2u},
    {0x203u, 438u, 2u},
    {0x204u, 440u, 2u},
    {0x205u, 442u, 2u},
    {0x206u, 444u, 2u},
    {0x207u, 446u, 2u},
    {0x208u, 448u, 2u},
    {0x209u, 450u, 2u},
    {0x20Au, 452u, 2u},
    {0x20Bu, 454u, 2u},
    {0x20Cu, 456u, 2u},
    {0x20Du, 458u, 2u},
    {0x20Eu, 460u, 2u},
    {0x20Fu, 462u, 2u},
    {0x210u, 464u, 2u},
    {0x211u, 466u, 2u},
    {0x212u, 468u, 2u},
    {0x213u, 470u, 2u},
    {0x214u, 472u, 2u},
    {0x215u, 474u, 2u},
    {0x216u, 476u, 2u},
    {0x217u, 478u, 2u},
    {0x218u, 480u, 2u},
    {0x219u, 482u, 2u},
    {0x21Au, 484u, 2u},
    {0x21Bu, 486u, 2u},
    {0x21Eu, 488u, 2u},
    {0x21Fu, 490u, 2u},
    {0x226u, 492u, 2u},
    {0x227u, 494u, 2u},
    {0x228u, 496u, 2u},
    {0x229u, 498u, 2u},
    {0x22Au, 500u, 3u},
    {0x22Bu, 503u, 3u},
    {0x22Cu, 506u, 3u},
    {0x22Du, 509u, 3u},
    {0x22Eu, 512u, 2u},
    {0x22Fu, 514u, 2u},
    {0x230u, 516u, 3u},
    {0x231u, 519u, 3u},
    {0x232u, 522u, 2u},
    {0x233u, 524u, 2u},
    {0x340u, 526u, 1u},
    {0x341u, 527u, 1u},
    {0x343u, 528u, 1u},
    {0x344u, 529u, 2u},
    {0x374u, 531u, 1u},
    {0x37Eu, 532u, 1u},
    {0x385u, 533u, 2u},
    {0x386u, 535u, 2u},
    {0x387u, 537u, 1u},
    {0x388u, 538u, 2u},
    {0x389u, 540u, 2u},
    {0x38Au, 542u, 2u},
    {0x38Cu, 544u, 2u},
    {0x38Eu, 546u, 2u},
    {0x38Fu, 548u, 2u},
    {0x390u, 550u, 3u},
    {0x3AAu, 553u, 2u},
    {0x3ABu, 555u, 2u},
    {0x3ACu, 557u, 2u},
    {0x3ADu, 559u, 2u},
    {0x3AEu, 561u, 2u},
    {0x3AFu, 563u, 2u},
    {0x3B0u, 565u, 3u},
    {0x3CAu, 568u, 2u},
    {0x3CBu, 570u, 2u},
    {0x3CCu, 572u, 2u},
    {0x3CDu, 574u, 2u},
    {0x3CEu, 576u, 2u},
    {0x3D3u, 578u, 2u},
    {0x3D4u, 580u, 2u},
    {0x400u, 582u, 2u},
    {0x401u, 584u, 2u},
    {0x403u, 586u, 2u},
    {0x407u, 588u, 2u},
    {0x40Cu, 590u, 2u},
    {0x40Du, 592u, 2u},
    {0x40Eu, 594u, 2u},
    {0x419u, 596u, 2u},
    {0x439u, 598u, 2u},
    {0x450u, 600u, 2u},
    {0x451u, 602u, 2u},
    {0x453u, 604u, 2u},
    {0x457u, 606u, 2u},
    {0x45Cu, 608u, 2u},
    {0x45Du, 610u, 2u},
    {0x45Eu, 612u, 2u},
    {0x476u, 614u, 2u},
    {0x477u, 616u, 2u},
    {0x4C1u, 618u, 2u},
    {0x4C2u, 620u, 2u},
    {0x4D0u, 622u, 2u},
    {0x4D1u, 624u, 2u},
    {0x4D2u, 626u, 2u},
    {0x4D3u, 628u, 2u},
    {0x4D6u, 630u, 2u},
    {0x4D7u, 632u, 2u},
    {0x4DAu, 634u, 2u},
    {0x4DBu, 636u, 2u},
    {0x4DCu, 638u, 2u},
    {0x4DDu, 640u, 2u},
    {0x4DEu, 642u, 2u},
    {0x4DFu, 644u, 2u},
    {0x4E2u, 646u, 2u},
    {0x4E3u, 648u, 2u},
    {0x4E4u, 650u, 2u},
    {0x4E5u, 652u, 2u},
    {0x4E6u, 654u, 2u},
    {0x4E7u, 656u, 2u},
    {0x4EAu, 658u, 2u},
    {0x4EBu, 660u, 2u},
    {0x4ECu, 662u, 2u},
    {0x4EDu, 664u, 2u},
    {0x4EEu, 666u, 2u},
    {0x4EFu, 668u, 2u},
    {0x4F0u, 670u, 2u},
    {0x4F1u, 672u, 2u},
    {0x4F2u, 674u, 2u},
    {0x4F3u, 676u, 2u},
    {0x4F4u, 678u, 2u},
    {0x4F5u, 680u, 2u},
    {0x4F8u, 682u, 2u},
    {0x4F9u, 684u, 2u},
    {0x622u, 686u, 2u},
    {0x623u, 688u, 2u},
    {0x624u, 690u, 2u},
    {0x625u, 692u, 2u},
    {0x626u, 694u, 2u},
    {0x6C0u, 696u, 2u},
    {0x6C2u, 698u, 2u},
    {0x6D3u, 700u, 2u},
    {0x929u, 702u, 2u},
    {0x931u, 704u, 2u},
    {0x934u, 706u, 2u},
    {0x958u, 708u, 2u},
    {0x959u, 710u, 2u},
    {0x95Au, 712u, 2u},
    {0x95Bu, 714u, 2u},
    {0x95Cu, 716u, 2u},
    {0x95Du, 718u, 2u},
    {0x95Eu, 720u, 2u},
    {0x95Fu, 722u, 2u},
    {0x9CBu, 724u, 2u},
    {0x9CCu, 726u, 2u},
    {0x9DCu, 728u, 2u},
    {0x9DDu, 730u, 2u},
    {0x9DFu, 732u, 2u},
    {0xA33u, 734u, 2u},
    {0xA36u, 736u, 2u},
    {0xA59u, 738u, 2u},
    {0xA5Au, 740u, 2u},
    {0xA5Bu, 742u, 2u},
    {0xA5Eu, 744u, 2u},
    {0xB48u, 746u, 2u},
    {0xB4Bu, 748u, 2u},
    {0xB4Cu, 750u, 2u},
    {0xB5Cu, 752u, 2u},
    {0xB5Du, 754u, 2u},
    {0xB94u, 756u, 2u},
    {0xBCAu, 758u, 2u},
    {0xBCBu, 760u, 2u},
    {0xBCCu, 762u, 2u},
    {0xC48u, 764u, 2u},
    {0xCC0u, 766u, 2u},
    {0xCC7u, 768u, 2u},
    {0xCC8u, 770u, 2u},
    {0xCCAu, 772u, 2u},
    {0xCCBu, 774u, 3u},
    {0xD4Au, 777u, 2u},
    {0xD4Bu, 779u, 2u},
    {0xD4Cu, 781u, 2u},
    {0xDDAu, 783u, 2u},
    {0xDDCu, 785u, 2u},
    {0xDDDu, 787u, 3u},
    {0xDDEu, 790u, 2u},
    {0xF43u, 792u, 2u},
    {0xF4Du, 794u, 2u},
    {0xF52u, 796u, 2u},
    {0xF57u, 798u, 2u},
    {0xF5Cu, 800u, 2u},
    {0xF69u, 802u, 2u},
    {0xF73u, 804u, 2u},
    {0xF75u, 806u, 2u},
    {0xF76u, 808u, 2u},
    {0xF78u, 810u, 2u},
    {0xF81u, 812u, 2u},
    {0xF93u, 814u, 2u},
    {0xF9Du, 816u, 2u},
    {0xFA2u, 818u, 2u},
    {0xFA7u, 820u, 2u},
    {0xFACu, 822u, 2u},
    {0xFB9u, 824u, 2u},
    {0x1026u, 826u, 2u},
    {0x1B06u, 828u, 2u},
    {0x1B08u, 830u, 2u},
    {0x1B0Au, 832u, 2u},
    {0x1B0Cu, 834u, 2u},
    {0x1B0Eu, 836u, 2u},
    {0x1B12u, 838u, 2u},
    {0x1B3Bu, 840u, 2u},
    {0x1B3Du, 842u, 2u},
    {0x1B40u, 844u, 2u},
    {0x1B41u, 846u, 2u},
    {0x1B43u, 848u, 2u},
    {0x1E00u, 850u, 2u},
    {0x1E01u, 852u, 2u},
    {0x1E02u, 854u, 2u},
    {0x1E03u, 856u, 2u},
    {0x1E04u, 858u, 2u},
    {0x1E05u, 860u, 2u},
    {0x1E06u, 862u, 2u},
    {0x1E07u, 864u, 2u},
    {0x1E08u, 866u, 3u},
    {0x1E09u, 869u, 3u},
    {0x1E0Au, 872u, 2u},
    {0x1E0Bu, 874u, 2u},
    {0x1E0Cu, 876u, 2u},
    {0x1E0Du, 878u, 2u},
    {0x1E0Eu, 880u, 2u},
    {0x1E0Fu, 882u, 2u},
    {0x1E10u, 884u, 2u},
    {0x1E11u, 886u, 2u},
    {0x1E12u, 888u, 2u},
    {0x1E13u, 890u, 2u},
    {0x1E14u, 892u, 3u},
    {0x1E15u, 895u, 3u},
    {0x1E16u, 898u, 3u},
    {0x1E17u, 901u, 3u},
    {0x1E18u, 904u, 2u},
    {0x1E19u, 906u, 2u},
    {0x1E1Au, 908u, 2u},
    {0x1E1Bu, 910u, 2u},
    {0x1E1Cu, 912u, 3u},
    {0x1E1Du, 915u, 3u},
    {0x1E1Eu, 918u, 2u},
    {0x1E1Fu, 920u, 2u},
    {0x1E20u, 922u, 2u},
    {0x1E21u, 924u, 2u},
    {0x1E22u, 926u, 2u},
    {0x1E23u, 928u, 2u},
    {0x1E24u, 930u, 2u},
    {0x1E25u, 932u, 2u},
    {0x1E26u, 934u, 2u},
    {0x1E27u, 936u, 2u},
    {0x1E28u, 938u, 2u},
    {0x1E29u, 940u, 2u},
    {0x1E2Au, 942u, 2u},
    {0x1E2Bu, 944u, 2u},
    {0x1E2Cu, 946u, 2u},
    {0x1E2Du, 948u, 2u},
    {0x1E2Eu, 950u, 3u},
    {0x1E2Fu, 953u, 3u},
    {0x1E30u, 956u, 2u},
    {0x1E31u, 958u, 2u},
    {0x1E32u, 960u, 2u},
    {0x1E33u, 962u, 2u},
    {0x1E34u, 964u, 2u},
    {0x1E35u, 966u, 2u},
    {0x1E36u, 968u, 2u},
    {0x1E37u, 970u, 2u},
    {0x1E38u, 972u, 3u},
    {0x1E39u, 975u, 3u},
    {0x1E3Au, 978u, 2u},
    {0x1E3Bu, 980u, 2u},
    {0x1E3Cu, 982u, 2u},
    {0x1E3Du, 984u, 2u},
    {0x1E3Eu, 986u, 2u},
    {0x1E3Fu, 988u, 2u},
    {0x1E40u, 990u, 2u},
    {0x1E41u, 992u, 2u},
    {0x1E42u, 994u, 2u},
    {0x1E43u, 996u, 2u},
    {0x1E44u, 998u, 2u},
    {0x1E45u, 1000u, 2u},
    {0x1E46u, 1002u, 2u},
    {0x1E47u, 1004u, 2u},
    {0x1E48u, 1006u, 2u},
    {0x1E49u, 1008u, 2u},
    {0x1E4Au, 1010u, 2u},
    {0x1E4Bu, 1012u, 2u},
    {0x1E4Cu, 1014u, 3u},
    {0x1E4Du, 1017u, 3u},
    {0x1E4Eu, 1020u, 3u},
    {0x1E4Fu, 1023u, 3u},
    {0x1E50u, 1026u, 3u},
    {0x1E51u, 1029u, 3u},
    {0x1E52u, 1032u, 3u},
    {0x1E53u, 1035u, 3u},
    {0x1E54u, 1038u, 2u},
    {0x1E55u, 1040u, 2u},
    {0x1E56u, 1042u, 2u},
    {0x1E57u, 1044u, 2u},
    {0x1E58u, 1046u, 2u},
    {0x1E59u, 1048u, 2u},
    {0x1E5Au, 1050u, 2u},
    {0x1E5Bu, 1052u, 2u},
    {0x1E5Cu, 1054u, 3u},
    {0x1E5Du, 1057u, 3u},
    {0x1E5Eu, 1060u, 2u},
    {0x1E5Fu, 1062u, 2u},
    {0x1E60u, 1064u, 2u},
    {0x1E61u, 1066u, 2u},
    {0x1E62u, 1068u, 2u},
    {0x1E63u, 1070u, 2u},
    {0x1E64u, 1072u, 3u},
    {0x1E65u, 1075u, 3u},
    {0x1E66u, 1078u, 3u},
    {0x1E67u, 1081u, 3u},
    {0x1E68u, 1084u, 3u},
    {0x1E69u, 1087u, 3u},
    {0x1E6Au, 1090u, 2u},
    {0x1E6Bu, 1092u, 2u},
    {0x1E6Cu, 1094u, 2u},
    {0x1E6Du, 1096u, 2u},
    {0x1E6Eu, 1098u, 2u},
    {0x1E6Fu, 1100u, 2u},
    {0x1E70u, 1102u, 2u},
    {0x1E71u, 1104u, 2u},
    {0x1E72u, 1106u, 2u},
    {0x1E73u, 1108u, 2u},
    {0x1E74u, 1110u, 2u},
    {0x1E75u, 1112u, 2u},
    {0x1E76u, 1114u, 2u},
    {0x1E77u, 1116u, 2u},
    {0x1E78u, 1118u, 3u},
    {0x1E79u, 1121u, 3u},
    {0x1E7Au, 1124u, 3u},
    {0x1E7Bu, 1127u, 3u},
    {0x1E7Cu, 1130u, 2u},
    {0x1E7Du, 1132u, 2u},
    {0x1E7Eu, 1134u, 2u},
    {0x1E7Fu, 1136u, 2u},
    {0x1E80u, 1138u, 2u},
    {0x1E81u, 1140u, 2u},
    {0x1E82u, 1142u, 2u},
    {0x1E83u, 1144u, 2u},
    {0x1E84u, 1146u, 2u},
    {0x1E85u, 1148u, 2u},
    {0x1E86u, 1150u, 2u},
    {0x1E87u, 1152u, 2u},
    {0x1E88u, 1154u, 2u},
    {0x1E89u, 1156u, 2u},
    {0x1E8Au, 1158u, 2u},
    {0x1E8Bu, 1160u, 2u},
    {0x1E8Cu, 1162u, 2u},
    {0x1E8Du, 1164u, 2u},
    {0x1E8Eu, 1166u, 2u},
    {0x1E8Fu, 1168u, 2u},
    {0x1E90u, 1170u, 2u},
    {0x1E91u, 1172u, 2u},
    {0x1E92u, 1174u, 2u},
    {0x1E93u, 1176u, 2u},
    {0x1E94u, 1178u, 2u},
    {0x1E95u, 1180u, 2u},
    {0x1E96u, 1182u, 2u},
    {0x1E97u, 1184u, 2u},
    {0x1E98u, 1186u, 2u},
    {0x1E99u, 1188u, 2u},
    {0x1E9Bu, 1190u, 2u},
    {0x1EA0u, 1192u, 2u},
    {0x1EA1u, 1194u, 2u},
    {0x1EA2u, 1196u, 2u},
    {0x1EA3u, 1198u, 2u},
    {0x1EA4u, 1200u, 3u},
    {0x1EA5u, 1203u, 3u},
    {0x1EA6u, 1206u, 3u},
    {0x1EA7u, 1209u, 3u},
    {0x1EA8u, 1212u, 3u},
    {0x1EA9u, 1215u, 3u},
    {0x1EAAu, 1218u, 3u},
    {0x1EABu, 1221u, 3u},
    {0x1EACu, 1224u, 3u},
    {0x1EADu, 1227u, 3u},
    {0x1EAEu, 1230u, 3u},
    {0x1EAFu, 1233u, 3u},
    {0x1EB0u, 1236u, 3u},
    {0x1EB1u, 1239u, 3u},
    {0x1EB2u, 1242u, 3u},
    {0x1EB3u, 1245u, 3u},
    {0x1EB4u, 1248u, 3u},
    {0x1EB5u, 1251u, 3u},
    {0x1EB6u, 1254u, 3u},
    {0x1EB7u, 1257u, 3u},
    {0x1EB8u, 1260u, 2u},
    {0x1EB9u, 1262u, 2u},
    {0x1EBAu, 1264u, 2u},
    {0x1EBBu, 1266u, 2u},
    {0x1EBCu, 1268u, 2u},
    {0x1EBDu, 1270u, 2u},
    {0x1EBEu, 1272u, 3u},
    {0x1EBFu, 1275u, 3u},
    {0x1EC0u, 1278u, 3u},
    {0x1EC1u, 1281u, 3u},
    {0x1EC2u, 1284u, 3u},
    {0x1EC3u, 1287u, 3u},
    {0x1EC4u, 1290u, 3u},
    {0x1EC5u, 1293u, 3u},
    {0x1EC6u, 1296u, 3u},
    {0x1EC7u, 1299u, 3u},
    {0x1EC8u, 1302u, 2u},
    {0x1EC9u, 1304u, 2u},
    {0x1ECAu, 1306u, 2u},
    {0x1ECBu, 1308u, 2u},
    {0x1ECCu, 1310u, 2u},
    {0x1ECDu, 1312u, 2u},
    {0x1ECEu, 1314u, 2u},
    {0x1ECFu, 1316u, 2u},
    {0x1ED0u, 1318u, 3u},
    {0x1ED1u, 1321u, 3u},
    {0x1ED2u, 1324u, 3u},
    {0x1ED3u, 1327u, 3u},
    {0x1ED4u, 1330u, 3u},
    {0x1ED5u, 1333u, 3u},
    {0x1ED6u, 1336u, 3u},
    {0x1ED7u, 1339u, 3u},
    {0x1ED8u, 1342u, 3u},
    {0x1ED9u, 1345u, 3u},
    {0x1EDAu, 1348u, 3u},
    {0x1EDBu, 1351u, 3u},
    {0x1EDCu, 1354u, 3u},
    {0x1EDDu, 1357u, 3u},
    {0x1EDEu, 1360u, 3u},
    {0x1EDFu, 1363u, 3u},
    {0x1EE0u, 1366u, 3u},
    {0x1EE1u, 1369u, 3u},
    {0x1EE2u, 1372u, 3u},
    {0x1EE3u, 1375u, 3u},
    {0x1EE4u, 1378u, 2u},
    {0x1EE5u, 1380u, 2u},
    {0x1EE6u, 1382u, 2u},
    {0x1EE7u, 1384u, 2u},
    {0x1EE8u, 1386u, 3u},
    {0x1EE9u, 1389u, 3u},
    {0x1EEAu, 1392u, 3u},
    {0x1EEBu, 1395u, 3u},
    {0x1EECu, 1398u, 3u},
    {0x1EEDu, 1401u, 3u},
    {0x1EEEu, 1404u, 3u},
    {0x1EEFu, 1407u, 3u},
    {0x1EF0u, 1410u, 3u},
    {0x1EF1u, 1413u, 3u},
    {0x1EF2u, 1416u, 2u},
    {0x1EF3u, 1418u, 2u},
    {0x1EF4u, 1420u, 2u},
    {0x1EF5u, 1422u, 2u},
    {0x1EF6u, 1424u, 2u},
    {0x1EF7u, 1426u, 2u},
    {0x1EF8u, 1428u, 2u},
    {0x1EF9u, 1430u, 2u},
    {0x1F00u, 1432u, 2u},
    {0x1F01u, 1434u, 2u},
    {0x1F02u, 1436u, 3u},
    {0x1F03u, 1439u, 3u},
    {0x1F04u, 1442u, 3u},
    {0x1F05u, 1445u, 3u},
    {0x1F06u, 1448u, 3u},
    {0x1F07u, 1451u, 3u},
    {0x1F08u, 1454u, 2u},
    {0x1F09u, 1456u, 2u},
    {0x1F0Au, 1458u, 3u},
    {0x1F0Bu, 1461u, 3u},
    {0x1F0Cu, 1464u, 3u},
    {0x1F0Du, 1467u, 3u},
    {0x1F0Eu, 1470u, 3u},
    {0x1F0Fu, 1473u, 3u},
    {0x1F10u, 1476u, 2u},
    {0x1F11u, 1478u, 2u},
    {0x1F12u, 1480u, 3u},
    {0x1F13u, 1483u, 3u},
    {0x1F14u, 1486u, 3u},
    {0x1F15u, 1489u, 3u},
    {0x1F18u, 1492u, 2u},
    {0x1F19u, 1494u, 2u},
    {0x1F1Au, 1496u, 3u},
    {0x1F1Bu, 1499u, 3u},
    {0x1F1Cu, 1502u, 3u},
    {0x1F1Du, 1505u, 3u},
    {0x1F20u, 1508u, 2u},
    {0x1F21u, 1510u, 2u},
    {0x1F22u, 1512u, 3u},
    {0x1F23u, 1515u, 3u},
    {0x1F24u, 1518u, 3u},
    {0x1F25u, 1521u, 3u},
    {0x1F26u, 1524u, 3u},
    {0x1F27u, 1527u, 3u},
    {0x1F28u, 1530u, 2u},
    {0x1F29u, 1532u, 2u},
    {0x1F2Au, 1534u, 3u},
    {0x1F2Bu, 1537u, 3u},
    {0x1F2Cu, 1540u, 3u},
    {0x1F2Du, 1543u, 3u},
    {0x1F2Eu, 1546u, 3u},
    {0x1F2Fu, 1549u, 3u},
    {0x1F30u, 1552u, 2u},
    {0x1F31u, 1554u, 2u},
    {0x1F32u, 1556u, 3u},
    {0x1F33u, 1559u, 3u},
    {0x1F34u, 1562u, 3u},
    {0x1F35u, 1565u, 3u},
    {0x1F36u, 1568u, 3u},
    {0x1F37u, 1571u, 3u},
    {0x1F38u, 1574u, 2u},
    {0x1F39u, 1576u, 2u},
    {0x1F3Au, 1578u, 3u},
    {0x1F3Bu, 1581u, 3u},
    {0x1F3Cu, 1584u, 3u},
    {0x1F3Du, 1587u, 3u},
    {0x1F3Eu, 1590u, 3u},
    {0x1F3Fu, 1593u, 3u},
    {0x1F40u, 1596u, 2u},
    {0x1F41u, 1598u, 2u},
    {0x1F42u, 1600u, 3u},
    {0x1F43u, 1603u, 3u},
    {0x1F44u, 1606u, 3u},
    {0x1F45u, 1609u, 3u},
    {0x1F48u, 1612u, 2u},
    {0x1F49u, 1614u, 2u},
    {0x1F4Au, 1616u, 3u},
    {0x1F4Bu, 1619u, 3u},
    {0x1F4Cu, 1622u, 3u},
    {0x1F4Du, 1625u, 3u},
    {0x1F50u, 1628u, 2u},
    {0x1F51u, 1630u, 2u},
    {0x1F52u, 1632u, 3u},
    {0x1F53u, 1635u, 3u},
    {0x1F54u, 1638u, 3u},
    {0x1F55u, 1641u, 3u},
    {0x1F56u, 1644u, 3u},
    {0x1F57u, 1647u, 3u},
    {0x1F59u, 1650u, 2u},
    {0x1F5Bu, 1652u, 3u},
    {0x1F5Du, 1655u, 3u},
    {0x1F5Fu, 1658u, 3u},
    {0x1F60u, 1661u, 2u},
    {0x1F61u, 1663u, 2u},
    {0x1F62u, 1665u, 3u},
    {0x1F63u, 1668u, 3u},
    {0x1F64u, 1671u, 3u},
    {0x1F65u, 1674u, 3u},
    {0x1F66u, 1677u, 3u},
    {0x1F67u, 1680u, 3u},
    {0x1F68u, 1683u, 2u},
    {0x1F69u, 1685u, 2u},
    {0x1F6Au, 1687u, 3u},
    {0x1F6Bu, 1690u, 3u},
    {0x1F6Cu, 1693u, 3u},
    {0x1F6Du, 1696u, 3u},
    {0x1F6Eu, 1699u, 3u},
    {0x1F6Fu, 1702u, 3u},
    {0x1F70u, 1705u, 2u},
    {0x1F71u, 1707u, 2u},
    {0x1F72u, 1709u, 2u},
    {0x1F73u, 1711u, 2u},
    {0x1F74u, 1713u, 2u},
    {0x1F75u, 1715u, 2u},
    {0x1F76u, 1717u, 2u},
    {0x1F77u, 1719u, 2u},
    {0x1F78u, 1721u, 2u},
    {0x1F79u, 1723u, 2u},
    {0x1F7Au, 1725u, 2u},
    {0x1F7Bu, 1727u, 2u},
    {0x1F7Cu, 1729u, 2u},
    {0x1F7Du, 1731u, 2u},
    {0x1F80u, 1733u, 3u},
    {0x1F81u, 1736u, 3u},
    {0x1F82u, 1739u, 4u},
    {0x1F83u, 1743u, 4u},
    {0x1F84u, 1747u, 4u},
    {0x1F85u, 1751u, 4u},
    {0x1F86u, 1755u, 4u},
    {0x1F87u, 1759u, 4u},
    {0x1F88u, 1763u, 3u},
    {0x1F89u, 1766u, 3u},
    {0x1F8Au, 1769u, 4u},
    {0x1F8Bu, 1773u, 4u},
    {0x1F8Cu, 1777u, 4u},
    {0x1F8Du, 1781u, 4u},
    {0x1F8Eu, 1785u, 4u},
    {0x1F8Fu, 1789u, 4u},
    {0x1F90u, 1793u, 3u},
    {0x1F91u, 1796u, 3u},
    {0x1F92u, 1799u, 4u},
    {0x1F93u, 1803u, 4u},
    {0x1F94u, 1807u, 4u},
    {0x1F95u, 1811u, 4u},
    {0x1F96u, 1815u, 4u},
    {0x1F97u, 1819u, 4u},
    {0x1F98u, 1823u, 3u},
    {0x1F99u, 1826u, 3u},
    {0x1F9Au, 1829u, 4u},
    {0x1F9Bu, 1833u, 4u},
    {0x1F9Cu, 1837u, 4u},
    {0x1F9Du, 1841u, 4u},
    {0x1F9Eu, 1845u, 4u},
    {0x1F9Fu, 1849u, 4u},
    {0x1FA0u, 1853u, 3u},
    {0x1FA1u, 1856u, 3u},
    {0x1FA2u, 1859u, 4u},
    {0x1FA3u, 1863u, 4u},
    {0x1FA4u, 1867u, 4u},
    {0x1FA5u, 1871u, 4u},
    {0x1FA6u, 1875u, 4u},
    {0x1FA7u, 1879u, 4u},
    {0x1FA8u, 1883u, 3u},
    {0x1FA9u, 1886u, 3u},
    {0x1FAAu, 1889u, 4u},
    {0x1FABu, 1893u, 4u},
    {0x1FACu, 1897u, 4u},
    {0x1FADu, 1901u, 4u},
    {0x1FAEu, 1905u, 4u},
    {0x1FAFu, 1909u, 4u},
    {0x1FB0u, 1913u, 2u},
    {0x1FB1u, 1915u, 2u},
    {0x1FB2u, 1917u, 3u},
    {0x1FB3u, 1920u, 2u},
    {0x1FB4u, 1922u, 3u},
    {0x1FB6u, 1925u, 2u},
    {0x1FB7u, 1927u, 3u},
    {0x1FB8u, 1930u, 2u},
    {0x1FB9u, 1932u, 2u},
    {0x1FBAu, 1934u, 2u},
    {0x1FBBu, 1936u, 2u},
    {0x1FBCu, 1938u, 2u},
    {0x1FBEu, 1940u, 1u},
    {0x1FC1u, 1941u, 2u},
    {0x1FC2u, 1943u, 3u},
    {0x1FC3u, 1946u, 2u},
    {0x1FC4u, 1948u, 3u},
    {0x1FC6u, 1951u, 2u},
    {0x1FC7u, 1953u, 3u},
    {0x1FC8u, 1956u, 2u},
    {0x1FC9u, 1958u, 2u},
    {0x1FCAu, 1960u, 2u},
    {0x1FCBu, 1962u, 2u},
    {0x1FCCu, 1964u, 2u},
    {0x1FCDu, 1966u, 2u},
    {0x1FCEu, 1968u, 2u},
    {0x1FCFu, 1970u, 2u},
    {0x1FD0u, 1972u, 2u},
    {0x1FD1u, 1974u, 2u},
    {0x1FD2u, 1976u, 3u},
    {0x1FD3u, 1979u, 3u},
    {0x1FD6u, 1982u, 2u},
    {0x1FD7u, 1984u, 3u},
    {0x1FD8u, 1987u, 2u},
    {0x1FD9u, 1989u, 2u},
    {0x1FDAu, 1991u, 2u},
    {0x1FDBu, 1993u, 2u},
    {0x1FDDu, 1995u, 2u},
    {0x1FDEu, 1997u, 2u},
    {0x1FDFu, 1999u, 2u},
    {0x1FE0u, 2001u, 2u},
    {0x1FE1u, 2003u, 2u},
    {0x1FE2u, 2005u, 3u},
    {0x1FE3u, 2008u, 3u},
    {0x1FE4u, 2011u, 2u},
    {0x1FE5u, 2013u, 2u},
    {0x1FE6u, 2015u, 2u},
    {0x1FE7u, 2017u, 3u},
    {0x1FE8u, 2020u, 2u},
    {0x1FE9u, 2022u, 2u},
    {0x1FEAu, 2024u, 2u},
    {0x1FEBu, 2026u, 2u},
    {0x1FECu, 2028u, 2u},
    {0x1FEDu, 2030u, 2u},
    {0x1FEEu, 2032u, 2u},
    {0x1FEFu, 2034u, 1u},
    {0x1FF2u, 2035u, 3u},
    {0x1FF3u, 2038u, 2u},
    {0x1FF4u, 2040u, 3u},
    {0x1FF6u, 2043u, 2u},
    {0x1FF7u, 2045u, 3u},
    {0x1FF8u, 2048u, 2u},
    {0x1FF9u, 2050u, 2u},
    {0x1FFAu, 2052u, 2u},
    {0x1FFBu, 2054u, 2u},
    {0x1FFCu, 2056u, 2u},
    {0x1FFDu, 2058u, 1u},
    {0x2000u, 2059u, 1u},
    {0x2001u, 2060u, 1u},
    {0x2126u, 2061u, 1u},
    {0x212Au, 2062u, 1u},
    {0x212Bu, 2063u, 2u},
    {0x219Au, 2065u, 2u},
    {0x219Bu, 2067u, 2u},
    {0x21AEu, 2069u, 2u},
    {0x21CDu, 2071u, 2u},
    {0x21CEu, 2073u, 2u},
    {0x21CFu, 2075u, 2u},
    {0x2204u, 2077u, 2u},
    {0x2209u, 2079u, 2u},
    {0x220Cu, 2081u, 2u},
    {0x2224u, 2083u, 2u},
    {0x2226u, 2085u, 2u},
    {0x2241u, 2087u, 2u},
    {0x2244u, 2089u, 2u},
    {0x2247u, 2091u, 2u},
    {0x2249u, 2093u, 2u},
    {0x2260u, 2095u, 2u},
    {0x2262u, 2097u, 2u},
    {0x226Du, 2099u, 2u},
    {0x226Eu, 2101u, 2u},
    {0x226Fu, 2103u, 2u},
    {0x2270u, 2105u, 2u},
    {0x2271u, 2107u, 2u},
    {0x2274u, 2109u, 2u},
    {0x2275u, 2111u, 2u},
    {0x2278u, 2113u, 2u},
    {0x2279u, 2115u, 2u},
    {0x2280u, 2117u, 2u},
    {0x2281u, 2119u, 2u},
    {0x2284u, 2121u, 2u},
    {0x2285u, 2123u, 2u},
    {0x2288u, 2125u, 2u},
    {0x2289u, 2127u, 2u},
    {0x22ACu, 2129u, 2u},
    {0x22ADu, 2131u, 2u},
    {0x22AEu, 2133u, 2u},
    {0x22AFu, 2135u, 2u},
    {0x22E0u, 2137u, 2u},
    {0x22E1u, 2139u, 2u},
    {0x22E2u, 2141u, 2u},
    {0x22E3u, 2143u, 2u},
    {0x22EAu, 2145u, 2u},
    {0x22EBu, 2147u, 2u},
    {0x22ECu, 2149u, 2u},
    {0x22EDu, 2151u, 2u},
    {0x2329u, 2153u, 1u},
    {0x232Au, 2154u, 1u},
    {0x2ADCu, 2155u, 2u},
    {0x304Cu, 2157u, 2u},
    {0x304Eu, 2159u, 2u},
    {0x3050u, 2161u, 2u},
    {0x3052u, 2163u, 2u},
    {0x3054u, 2165u, 2u},
    {0x3056u, 2167u, 2u},
    {0x3058u, 2169u, 2u},
    {0x305Au, 2171u, 2u},
    {0x305Cu, 2173u, 2u},
    {0x305Eu, 2175u, 2u},
    {0x3060u, 2177u, 2u},
    {0x3062u, 2179u, 2u},
    {0x3065u, 2181u, 2u},
    {0x3067u, 2183u, 2u},
    {0x3069u, 2185u, 2u},
    {0x3070u, 2187u, 2u},
    {0x3071u, 2189u, 2u},
    {0x3073u, 2191u, 2u},
    {0x3074u, 2193u, 2u},
    {0x3076u, 2195u, 2u},
    {0x3077u, 2197u, 2u},
    {0x3079u, 2199u, 2u},
    {0x307Au, 2201u, 2u},
    {0x307Cu, 2203u, 2u},
    {0x307Du, 2205u, 2u},
    {0x3094u, 2207u, 2u},
    {0x309Eu, 2209u, 2u},
    {0x30ACu, 2211u, 2u},
    {0x30AEu, 2213u, 2u},
    {0x30B0u, 2215u, 2u},
    {0x30B2u, 2217u, 2u},
    {0x30B4u, 2219u, 2u},
    {0x30B6u, 2221u, 2u},
    {0x30B8u, 2223u, 2u},
    {0x30BAu, 2225u, 2u},
    {0x30BCu, 2227u, 2u},
    {0x30BEu, 2229u, 2u},
    {0x30C0u, 2231u, 2u},
    {0x30C2u, 2233u, 2u},
    {0x30C5u, 2235u, 2u},
    {0x30C7u, 2237u, 2u},
    {0x30C9u, 2239u, 2u},
    {0x30D0u, 2241u, 2u},
    {0x30D1u, 2243u, 2u},
    {0x30D3u, 2245u, 2u},
    {0x30D4u, 2247u, 2u},
    {0x30D6u, 2249u, 2u},
    {0x30D7u, 2251u, 2u},
    {0x30D9u, 2253u, 2u},
    {0x30DAu, 2255u, 2u},
    {0x30DCu, 2257u, 2u},
    {0x30DDu, 2259u, 2u},
    {0x30F4u, 2261u, 2u},
    {0x30F7u, 2263u, 2u},
    {0x30F8u, 2265u, 2u},
    {0x30F9u, 2267u, 2u},
    {0x30FAu, 2269u, 2u},
    {0x30FEu, 2271u, 2u},
    {0xF900u, 2273u, 1u},
    {0xF901u, 2274u, 1u},
    {0xF902u, 2275u, 1u},
    {0xF903u, 2276u, 1u},
    {0xF904u, 2277u, 1u},
    {0xF905u, 2278u, 1u},
    {0xF906u, 2279u, 1u},
    {0xF907u, 2280u, 1u},
    {0xF908u, 2281u, 1u},
    {0xF909u, 2282u, 1u},
    {0xF90Au, 2283u, 1u},
    {0xF90Bu, 2284u, 1u},
    {0xF90Cu, 2285u, 1u},
    {0xF90Du, 2286u, 1u},
    {0xF90Eu, 2287u, 1u},
    {0xF90Fu, 2288u, 1u},
    {0xF910u, 2289u, 1u},
    {0xF911u, 2290u, 1u},
    {0xF912u, 2291u, 1u},
    {0xF913u, 2292u, 1u},
    {0xF914u, 2293u, 1u},
    {0xF915u, 2294u, 1u},
    {0xF916u, 2295u, 1u},
    {0xF917u, 2296u, 1u},
    {0xF918u, 2297u, 1u},
    {0xF919u, 2298u, 1u},
    {0xF91Au, 2299u, 1u},
    {0xF91Bu, 2300u, 1u},
    {0xF91Cu, 2301u, 1u},
    {0xF91Du, 2302u, 1u},
    {0xF91Eu, 2303u, 1u},
    {0xF91Fu, 2304u, 1u},
    {0xF920u, 2305u, 1u},
    {0xF921u, 2306u, 1u},
    {0xF922u, 2307u, 1u},
    {0xF923u, 2308u, 1u},
    {0xF924u, 2309u, 1u},
    {0xF925u, 2310u, 1u},
    {0xF926u, 2311u, 1u},
    {0xF927u, 2312u, 1u},
    {0xF928u, 2313u, 1u},
    {0xF929u, 2314u, 1u},
    {0xF92Au, 2315u, 1u},
    {0xF92Bu, 2316u, 1u},
    {0xF92Cu, 2317u, 1u},
    {0xF92Du, 2318u, 1u},
    {0xF92Eu, 2319u, 1u},
    {0xF92Fu, 2320u, 1u},
    {0xF930u, 2321u, 1u},
    {0xF931u, 2322u, 1u},
    {0xF932u, 2323u, 1u},
    {0xF933u, 2324u, 1u},
    {0xF934u, 2325u, 1u},
    {0xF935u, 2326u, 1u},
    {0xF936u, 2327u, 1u},
    {0xF937u, 2328u, 1u},
    {0xF938u, 2329u, 1u},
    {0xF939u, 2330u, 1u},
    {0xF93Au, 2331u, 1u},
    {0xF93Bu, 2332u, 1u},
    {0xF93Cu, 2333u, 1u},
    {0xF93Du, 2334u, 1u},
    {0xF93Eu, 2335u, 1u},
    {0xF93Fu, 2336u, 1u},
    {0xF940u, 2337u, 1u},
    {0xF941u, 2338u, 1u},
    {0xF942u, 2339u, 1u},
    {0xF943u, 2340u, 1u},
    {0xF944u, 2341u, 1u},
    {0xF945u, 2342u, 1u},
    {0xF946u, 2343u, 1u},
    {0xF947u, 2344u, 1u},
    {0xF948u, 2345u, 1u},
    {0xF949u, 2346u, 1u},
    {0xF94Au, 2347u, 1u},
    {0xF94Bu, 2348u, 1u},
    {0xF94Cu, 2349u, 1u},
    {0xF94Du, 2350u, 1u},
    {0xF94Eu, 2351u, 1u},
    {0xF94Fu, 2352u, 1u},
    {0xF950u, 2353u, 1u},
    {0xF951u, 2354u, 1u},
    {0xF952u, 2355u, 1u},
    {0xF953u, 2356u, 1u},
    {0xF954u, 2357u, 1u},
    {0xF955u, 2358u, 1u},
    {0xF956u, 2359u, 1u},
    {0xF957u, 2360u, 1u},
    {0xF958u, 2361u, 1u},
    {0xF959u, 2362u, 1u},
    {0xF95Au, 2363u, 1u},
    {0xF95Bu, 2364u, 1u},
    {0xF95Cu, 2365u, 1u},
    {0xF95Du, 2366u, 1u},
    {0xF95Eu, 2367u, 1u},
    {0xF95Fu, 2368u, 1u},
    {0xF960u, 2369u, 1u},
    {0xF961u, 2370u, 1u},
    {0xF962u, 2371u, 1u},
    {0xF963u, 2372u, 1u},
    {0xF964u, 2373u, 1u},
    {0xF965u, 2374u, 1u},
    {0xF966u, 2375u, 1u},
    {0xF967u, 2376u, 1u},
    {0xF968u, 2377u, 1u},
    {0xF969u, 2378u, 1u},
    {0xF96Au, 2379u, 1u},
    {0xF96Bu, 2380u, 1u},
    {0xF96Cu, 2381u, 1u},
    {0xF96Du, 2382u, 1u},
    {0xF96Eu, 2383u, 1u},
    {0xF96Fu, 2384u, 1u},
    {0xF970u, 2385u, 1u},
    {0xF971u, 2386u, 1u},
    {0xF972u, 2387u, 1u},
    {0xF973u, 2388u, 1u},
    {0xF974u, 2389u, 1u},
    {0xF975u, 2390u, 1u},
    {0xF976u, 2391u, 1u},
    {0xF977u, 2392u, 1u},
    {0xF978u, 2393u, 1u},
    {0xF979u, 2394u, 1u},
    {0xF97Au, 2395u, 1u},
    {0xF97Bu, 2396u, 1u},
    {0xF97Cu, 2397u, 1u},
    {0xF97Du, 2398u, 1u},
    {0xF97Eu, 2399u, 1u},
    {0xF97Fu, 2400u, 1u},
    {0xF980u, 2401u, 1u},
    {0xF981u, 2402u, 1u},
    {0xF982u, 2403u, 1u},
    {0xF983u, 2404u, 1u},
    {0xF984u, 2405u, 1u},
    {0xF985u, 2406u, 1u},
    {0xF986u, 2407u, 1u},
    {0xF987u, 2408u, 1u},
    {0xF988u, 2409u, 1u},
    {0xF989u, 2410u, 1u},
    {0xF98Au, 2411u, 1u},
    {0xF98Bu, 2412u, 1u},
    {0xF98Cu, 2413u, 1u},
    {0xF98Du, 2414u, 1u},
    {0xF98Eu, 2415u, 1u},
    {0xF98Fu, 2416u, 1u},
    {0xF990u, 2417u, 1u},
    {0xF991u, 2418u, 1u},
    {0xF992u, 2419u, 1u},
    {0xF993u, 2420u, 1u},
    {0xF994u, 2421u, 1u},
    {0xF995u, 2422u, 1u},
    {0xF996u, 2423u, 1u},
    {0xF997u, 2424u, 1u},
    {0xF998u, 2425u, 1u},
    {0xF999u, 2426u, 1u},
    {0xF99Au, 2427u, 1u},
    {0xF99Bu, 2428u, 1u},
    {0xF99Cu, 2429u, 1u},
    {0xF99Du, 2430u, 1u},
    {0xF99Eu, 2431u, 1u},
    {0xF99Fu, 2432u, 1u},
    {0xF9A0u, 2433u, 1u},
    {0xF9A1u, 2434u, 1u},
    {0xF9A2u, 2435u, 1u},
    {0xF9A3u, 2436u, 1u},
    {0xF9A4u, 2437u, 1u},
    {0xF9A5u, 2438u, 1u},
    {0xF9A6u, 2439u, 1u},
    {0xF9A7u, 2440u, 1u},
    {0xF9A8u, 2441u, 1u},
    {0xF9A9u, 2442u, 1u},
    {0xF9AAu, 2443u, 1u},
    {0xF9ABu, 2444u, 1u},
    {0xF9ACu, 2445u, 1u},
    {0xF9ADu, 2446u, 1u},
    {0xF9AEu, 2447u, 1u},
    {0xF9AFu, 2448u, 1u},
    {0xF9B0u, 2449u, 1u},
    {0xF9B1u, 2450u, 1u},
    {0xF9B2u, 2451u, 1u},
    {0xF9B3u, 2452u, 1u},
    {0xF9B4u, 2453u, 1u},
    {0xF9B5u, 2454u, 1u},
    {0xF9B6u, 2455u, 1u},
    {0xF9B7u, 2456u, 1u},
    {0xF9B8u, 2457u, 1u},
    {0xF9B9u, 2458u, 1u},
    {0xF9BAu, 2459u, 1u},
    {0xF9BBu, 2460u, 1u},
    {0xF9BCu, 2461u, 1u},
    {0xF9BDu, 2462u, 1u},
    {0xF9BEu, 2463u, 1u},
    {0xF9BFu, 2464u, 1u},
    {0xF9C0u, 2465u, 1u},
    {0xF9C1u, 2466u, 1u},
    {0xF9C2u, 2467u, 1u},
    {0xF9C3u, 2468u, 1u},
    {0xF9C4u, 2469u, 1u},
    {0xF9C5u, 2470u, 1u},
    {0xF9C6u, 2471u, 1u},
    {0xF9C7u, 2472u, 1u},
    {0xF9C8u, 2473u, 1u},
    {0xF9C9u, 2474u, 1u},
    {0xF9CAu, 2475u, 1u},
    {0xF9CBu, 2476u, 1u},
    {0xF9CCu, 2477u, 1u},
    {0xF9CDu, 2478u, 1u},
    {0xF9CEu, 2479u, 1u},
    {0xF9CFu, 2480u, 1u},
    {0xF9D0u, 2481u, 1u},
    {0xF9D1u, 2482u, 1u},
    {0xF9D2u, 2483u, 1u},
    {0xF9D3u, 2484u, 1u},
    {0xF9D4u, 2485u, 1u},
    {0xF9D5u, 2486u, 1u},
    {0xF9D6u, 2487u, 1u},
    {0xF9D7u, 2488u, 1u},
    {0xF9D8u, 2489u, 1u},
    {0xF9D9u, 2490u, 1u},
    {0xF9DAu, 2491u, 1u},
    {0xF9DBu, 2492u, 1u},
    {0xF9DCu, 2493u, 1u},
    {0xF9DDu, 2494u, 1u},
    {0xF9DEu, 2495u, 1u},
    {0xF9DFu, 2496u, 1u},
    {0xF9E0u, 2497u, 1u},
    {0xF9E1u, 2498u, 1u},
    {0xF9E2u, 2499u, 1u},
    {0xF9E3u, 2500u, 1u},
    {0xF9E4u, 2501u, 1u},
    {0xF9E5u, 2502u, 1u},
    {0xF9E6u, 2503u, 1u},
    {0xF9E7u, 2504u, 1u},
    {0xF9E8u, 2505u, 1u},
    {0xF9E9u, 2506u, 1u},
    {0xF9EAu, 2507u, 1u},
    {0xF9EBu, 2508u, 1u},
    {0xF9ECu, 2509u, 1u},
    {0xF9EDu, 2510u, 1u},
    {0xF9EEu, 2511u, 1u},
    {0xF9EFu, 2512u, 1u},
    {0xF9F0u, 2513u, 1u},
    {0xF9F1u, 2514u, 1u},
    {0xF9F2u, 2515u, 1u},
    {0xF9F3u, 2516u, 1u},
    {0xF9F4u, 2517u, 1u},
    {0xF9F5u, 2518u, 1u},
    {0xF9F6u, 2519u, 1u},
    {0xF9F7u, 2520u, 1u},
    {0xF9F8u, 2521u, 1u},
    {0xF9F9u, 2522u, 1u},
    {0xF9FAu, 2523u, 1u},
    {0xF9FBu, 2524u, 1u},
    {0xF9FCu, 2525u, 1u},
    {0xF9FDu, 2526u, 1u},
    {0xF9FEu, 2527u, 1u},
    {0xF9FFu, 2528u, 1u},
    {0xFA00u, 2529u, 1u},
    {0xFA01u, 2530u, 1u},
    {0xFA02u, 2531u, 1u},
    {0xFA03u, 2532u, 1u},
    {0xFA04u, 2533u, 1u},
    {0xFA05u, 2534u, 1u},
    {0xFA06u, 2535u, 1u},
    {0xFA07u, 2536u, 1u},
    {0xFA08u, 2537u, 1u},
    {0xFA09u, 2538u, 1u},
    {0xFA0Au, 2539u, 1u},
    {0xFA0Bu, 2540u, 1u},
    {0xFA0Cu, 2541u, 1u},
    {0xFA0Du, 2542u, 1u},
    {0xFA10u, 2543u, 1u},
    {0xFA12u, 2544u, 1u},
    {0xFA15u, 2545u, 1u},
    {0xFA16u, 2546u, 1u},
    {0xFA17u, 2547u, 1u},
    {0xFA18u, 2548u, 1u},
    {0xFA19u, 2549u, 1u},
    {0xFA1Au, 2550u, 1u},
    {0xFA1Bu, 2551u, 1u},
    {0xFA1Cu, 2552u, 1u},
    {0xFA1Du, 2553u, 1u},
    {0xFA1Eu, 2554u, 1u},
    {0xFA20u, 2555u, 1u},
    {0xFA22u, 2556u, 1u},
    {0xFA25u, 2557u, 1u},
    {0xFA26u, 2558u, 1u},
    {0xFA2Au, 2559u, 1u},
    {0xFA2Bu, 2560u, 1u},
    {0xFA2Cu, 2561u, 1u},
    {0xFA2Du, 2562u, 1u},
    {0xFA2Eu, 2563u, 1u},
    {0xFA2Fu, 2564u, 1u},
    {0xFA30u, 2565u, 1u},
    {0xFA31u, 2566u, 1u},
    {0xFA32u, 2567u, 1u},
    {0xFA33u, 2568u, 1u},
    {0xFA34u, 2569u, 1u},
    {0xFA35u, 2570u, 1u},
    {0xFA36u, 2571u, 1u},
    {0xFA37u, 2572u, 1u},
    {0xFA38u, 2573u, 1u},
    {0xFA39u, 2574u, 1u},
    {0xFA3Au, 2575u, 1u},
    {0xFA3Bu, 2576u, 1u},
    {0xFA3Cu, 2577u, 1u},
    {0xFA3Du, 2578u, 1u},
    {0xFA3Eu, 2579u, 1u},
    {0xFA3Fu, 2580u, 1u},
    {0xFA40u, 2581u, 1u},
    {0xFA41u, 2582u, 1u},
    {0xFA42u, 2583u, 1u},
    {0xFA43u, 2584u, 1u},
    {0xFA44u, 2585u, 1u},
    {0xFA45u, 2586u, 1u},
    {0xFA46u, 2587u, 1u},
    {0xFA47u, 2588u, 1u},
    {0xFA48u, 2589u, 1u},
    {0xFA49u, 2590u, 1u},
    {0xFA4Au, 2591u, 1u},
    {0xFA4Bu, 2592u, 1u},
    {0xFA4Cu, 2593u, 1u},
    {0xFA4Du, 2594u, 1u},
    {0xFA4Eu, 2595u, 1u},
    {0xFA4Fu, 2596u, 1u},
    {0xFA50u, 2597u, 1u},
    {0xFA51u, 2598u, 1u},
    {0xFA52u, 2599u, 1u},
    {0xFA53u, 2600u, 1u},
    {0xFA54u, 2601u, 1u},
    {0xFA55u, 2602u, 1u},
    {0xFA56u, 2603u, 1u},
    {0xFA57u, 2604u, 1u},
    {0xFA58u, 2605u, 1u},
    {0xFA59u, 2606u, 1u},
    {0xFA5Au, 2607u, 1u},
    {0xFA5Bu, 2608u, 1u},
    {0xFA5Cu, 2609u, 1u},
    {0xFA5Du, 2610u, 1u},
    {0xFA5Eu, 2611u, 1u},
    {0xFA5Fu, 2612u, 1u},
    {0xFA60u, 2613u, 1u},
    {0xFA61u, 2614u, 1u},
    {0xFA62u, 2615u, 1u},
    {0xFA63u, 2616u, 1u},
    {0xFA64u, 2617u, 1u},
    {0xFA65u, 2618u, 1u},
    {0xFA66u, 2619u, 1u},
    {0xFA67u, 2620u, 1u},
    {0xFA68u, 2621u, 1u},
    {0xFA69u, 2622u, 1u},
    {0xFA6Au, 2623u, 1u},
    {0xFA6Bu, 2624u, 1u},
    {0xFA6Cu, 2625u, 1u},
    {0xFA6Du, 2626u, 1u},
    {0xFA70u, 2627u, 1u},
    {0xFA71u, 2628u, 1u},
    {0xFA72u, 2629u, 1u},
    {0xFA73u, 2630u, 1u},
    {0xFA74u, 2631u, 1u},
    {0xFA75u, 2632u, 1u},
    {0xFA76u, 2633u, 1u},
    {0xFA77u, 2634u, 1u},
    {0xFA78u, 2635u, 1u},
    {0xFA79u, 2636u, 1u},
    {0xFA7Au, 2637u, 1u},
    {0xFA7Bu, 2638u, 1u},
    {0xFA7Cu, 2639u, 1u},
    {0xFA7Du, 2640u, 1u},
    {0xFA7Eu, 2641u, 1u},
    {0xFA7Fu, 2642u, 1u},
    {0xFA80u, 2643u, 1u},
    {0xFA81u, 2644u, 1u},
    {0xFA82u, 2645u, 1u},
    {0xFA83u, 2646u, 1u},
    {0xFA84u, 2647u, 1u},
    {0xFA85u, 2648u, 1u},
    {0xFA86u, 2649u, 1u},
    {0xFA87u, 2650u, 1u},
    {0xFA88u, 2651u, 1u},
    {0xFA89u, 2652u, 1u},
    {0xFA8Au, 2653u, 1u},
    {0xFA8Bu, 2654u, 1u},
    {0xFA8Cu, 2655u, 1u},
    {0xFA8Du, 2656u, 1u},
    {0xFA8Eu, 2657u, 1u},
    {0xFA8Fu, 2658u, 1u},
    {0xFA90u, 2659u, 1u},
    {0xFA91u, 2660u, 1u},
    {0xFA92u, 2661u, 1u},
    {0xFA93u, 2662u, 1u},
    {0xFA94u, 2663u, 1u},
    {0xFA95u, 2664u, 1u},
    {0xFA96u, 2665u, 1u},
    {0xFA97u, 2666u, 1u},
    {0xFA98u, 2667u, 1u},
    {0xFA99u, 2668u, 1u},
    {0xFA9Au, 2669u, 1u},
    {0xFA9Bu, 2670u, 1u},
    {0xFA9Cu, 2671u, 1u},
    {0xFA9Du, 2672u, 1u},
    {0xFA9Eu, 2673u, 1u},
    {0xFA9Fu, 2674u, 1u},
    {0xFAA0u, 2675u, 1u},
    {0xFAA1u, 2676u, 1u},
    {0xFAA2u, 2677u, 1u},
    {0xFAA3u, 2678u, 1u},
    {0xFAA4u, 2679u, 1u},
    {0xFAA5u, 2680u, 1u},
    {0xFAA6u, 2681u, 1u},
    {0xFAA7u, 2682u, 1u},
    {0xFAA8u, 2683u, 1u},
    {0xFAA9u, 2684u, 1u},
    {0xFAAAu, 2685u, 1u},
    {0xFAABu, 2686u, 1u},
    {0xFAACu, 2687u, 1u},
    {0xFAADu, 2688u, 1u},
    {0xFAAEu, 2689u, 1u},
    {0xFAAFu, 2690u, 1u},
    {0xFAB0u, 2691u, 1u},
    {0xFAB1u, 2692u, 1u},
    {0xFAB2u, 2693u, 1u},
    {0xFAB3u, 2694u, 1u},
    {0xFAB4u, 2695u, 1u},
    {0xFAB5u, 2696u, 1u},
    {0xFAB6u, 2697u, 1u},
    {0xFAB7u, 2698u, 1u},
    {0xFAB8u, 2699u, 1u},
    {0xFAB9u, 2700u, 1u},
    {0xFABAu, 2701u, 1u},
    {0xFABBu, 2702u, 1u},
    {0xFABCu, 2703u, 1u},
    {0xFABDu, 2704u, 1u},
    {0xFABEu, 2705u, 1u},
    {0xFABFu, 2706u, 1u},
    {0xFAC0u, 2707u, 1u},
    {0xFAC1u, 2708u, 1u},
    {0xFAC2u, 2709u, 1u},
    {0xFAC3u, 2710u, 1u},
    {0xFAC4u, 2711u, 1u},
    {0xFAC5u, 2712u, 1u},
    {0xFAC6u, 2713u, 1u},
    {0xFAC7u, 2714u, 1u},
    {0xFAC8u, 2715u, 1u},
    {0xFAC9u, 2716u, 1u},
    {0xFACAu, 2717u, 1u},
    {0xFACBu, 2718u, 1u},
    {0xFACCu, 2719u, 1u},
    {0xFACDu, 2720u, 1u},
    {0xFACEu, 2721u, 1u},
    {0xFACFu, 2722u, 1u},
    {0xFAD0u, 2723u, 1u},
    {0xFAD1u, 2724u, 1u},
    {0xFAD2u, 2725u, 1u},
    {0xFAD3u, 2726u, 1u},
    {0xFAD4u, 2727u, 1u},
    {0xFAD5u, 2728u, 1u},
    {0xFAD6u, 2729u, 1u},
    {0xFAD7u, 2730u, 1u},
    {0xFAD8u, 2731u, 1u},
    {0xFAD9u, 2732u, 1u},
    {0xFB1Du, 2733u, 2u},
    {0xFB1Fu, 2735u, 2u},
    {0xFB2Au, 2737u, 2u},
    {0xFB2Bu, 2739u, 2u},
    {0xFB2Cu, 2741u, 3u},
    {0xFB2Du, 2744u, 3u},
    {0xFB2Eu, 2747u, 2u},
    {0xFB2Fu, 2749u, 2u},
    {0xFB30u, 2751u, 2u},
    {0xFB31u, 2753u, 2u},
    {0xFB32u, 2755u, 2u},
    {0xFB33u, 2757u, 2u},
    {0xFB34u, 2759u, 2u},
    {0xFB35u, 2761u, 2u},
    {0xFB36u, 2763u, 2u},
    {0xFB38u, 2765u, 2u},
    {0xFB39u, 2767u, 2u},
    {0xFB3Au, 2769u, 2u},
    {0xFB3Bu, 2771u, 2u},
    {0xFB3Cu, 2773u, 2u},
    {0xFB3Eu, 2775u, 2u},
    {0xFB40u, 2777u, 2u},
    {0xFB41u, 2779u, 2u},
    {0xFB43u, 2781u, 2u},
    {0xFB44u, 2783u, 2u},
    {0xFB46u, 2785u, 2u},
    {0xFB47u, 2787u, 2u},
    {0xFB48u, 2789u, 2u},
    {0xFB49u, 2791u, 2u},
    {0xFB4Au, 2793u, 2u},
    {0xFB4Bu, 2795u, 2u},
    {0xFB4Cu, 2797u, 2u},
    {0xFB4Du, 2799u, 2u},
    {0xFB4Eu, 2801u, 2u},
    {0x1109Au, 2803u, 2u},
    {0x1109Cu, 2805u, 2u},
    {0x110ABu, 2807u, 2u},
    {0x1112Eu, 2809u, 2u},
    {0x1112Fu, 2811u, 2u},
    {0x1134Bu, 2813u, 2u},
    {0x1134Cu, 2815u, 2u},
    {0x114BBu, 2817u, 2u},
    {0x114BCu, 2819u, 2u},
    {0x114BEu, 2821u, 2u},
    {0x115BAu, 2823u, 2u},
    {0x115BBu, 2825u, 2u},
    {0x11938u, 2827u, 2u},
    {0x1D15Eu, 2829u, 2u},
    {0x1D15Fu, 2831u, 2u},
    {0x1D160u, 2833u, 3u},
    {0x1D161u, 2836u, 3u},
    {0x1D162u, 2839u, 3u},
    {0x1D163u, 2842u, 3u},
    {0x1D164u, 2845u, 3u},
    {0x1D1BBu, 2848u, 2u},
    {0x1D1BCu, 2850u, 2u},
    {0x1D1BDu, 2852u, 3u},
    {0x1D1BEu, 2855u, 3u},
    {0x1D1BFu, 2858u, 3u},
    {0x1D1C0u, 2861u, 3u},
    {0x2F800u, 2864u, 1u},
    {0x2F801u, 2865u, 1u},
    {0x2F802u, 2866u, 1u},
    {0x2F803u, 2867u, 1u},
    {0x2F804u, 2868u, 1u},
    {0x2F805u, 2869u, 1u},
    {0x2F806u, 2870u, 1u},
    {0x2F807u, 2871u, 1u},
    {0x2F808u, 2872u, 1u},
    {0x2F809u, 2873u, 1u},
    {0x2F80Au, 2874u, 1u},
    {0x2F80Bu, 2875u, 1u},
    {0x2F80Cu, 2876u, 1u},
    {0x2F80Du, 2877u, 1u},
    {0x2F80Eu, 2878u, 1u},
    {0x2F80Fu, 2879u, 1u},
    {0x2F810u, 2880u, 1u},
    {0x2F811u, 2881u, 1u},
    {0x2F812u, 2882u, 1u},
    {0x2F813u, 2883u, 1u},
    {0x2F814u, 2884u, 1u},
    {0x2F815u, 2885u, 1u},
    {0x2F816u, 2886u, 1u},
    {0x2F817u, 2887u, 1u},
    {0x2F818u, 2888u, 1u},
    {0x2F819u, 2889u, 1u},
    {0x2F81Au, 2890u, 1u},
    {0x2F81Bu, 2891u, 1u},
    {0x2F81Cu, 2892u, 1u},
    {0x2F81Du, 2893u, 1u},
    {0x2F81Eu, 2894u, 1u},
    {0x2F81Fu, 2895u, 1u},
    {0x2F820u, 2896u, 1u},
    {0x2F821u, 2897u, 1u},
    {0x2F822u, 2898u, 1u},
    {0x2F823u, 2899u, 1u},
    {0x2F824u, 2900u, 1u},
    {0x2F825u, 2901u, 1u},
    {0x2F826u, 2902u, 1u},
    {0x2F827u, 2903u, 1u},
    {0x2F828u, 2904u, 1u},
    {0x2F829u, 2905u, 1u},
    {0x2F82Au, 2906u, 1u},
    {0x2F82Bu, 2907u, 1u},
    {0x2F82Cu, 2908u, 1u},
    {0x2F82Du, 2909u, 1u},
    {0x2F82Eu, 2910u, 1u},
    {0x2F82Fu, 2911u, 1u},
    {0x2F830u, 2912u, 1u},
    {0x2F831u, 2913u, 1u},
    {0x2F832u, 2914u, 1u},
    {0x2F833u, 2915u, 1u},
    {0x2F834u, 2916u, 1u},
    {0x2F835u, 2917u, 1u},
    {0x2F836u, 2918u, 1u},
    {0x2F837u, 2919u, 1u},
    {0x2F838u, 2920u, 1u},
    {0x2F839u, 2921u, 1u},
    {0x2F83Au, 2922u, 1u},
    {0x2F83Bu, 2923u, 1u},
    {0x2F83Cu, 2924u, 1u},
    {0x2F83Du, 2925u, 1u},
    {0x2F83Eu, 2926u, 1u},
    {0x2F83Fu, 2927u, 1u},
    {0x2F840u, 2928u, 1u},
    {0x2F841u, 2929u, 1u},
    {0x2F842u, 2930u, 1u},
    {0x2F843u, 2931u, 1u},
    {0x2F844u, 2932u, 1u},
    {0x2F845u, 2933u, 1u},
    {0x2F846u, 2934u, 1u},
    {0x2F847u, 2935u, 1u},
    {0x2F848u, 2936u, 1u},
    {0x2F849u, 2937u, 1u},
    {0x2F84Au, 2938u, 1u},
    {0x2F84Bu, 2939u, 1u},
    {0x2F84Cu, 2940u, 1u},
    {0x2F84Du, 2941u, 1u},
    {0x2F84Eu, 2942u, 1u},
    {0x2F84Fu, 2943u, 1u},
    {0x2F850u, 2944u, 1u},
    {0x2F851u, 2945u, 1u},
    {0x2F852u, 2946u, 1u},
    {0x2F853u, 2947u, 1u},
    {0x2F854u, 2948u, 1u},
    {0x2F855u, 2949u, 1u},
    {0x2F856u, 2950u, 1u},
    {0x2F857u, 2951u, 1u},
    {0x2F858u, 2952u, 1u},
    {0x2F859u, 2953u, 1u},
    {0x2F85Au, 2954u, 1u},
    {0x2F85Bu, 2955u, 1u},
    {0x2F85Cu, 2956u, 1u},
    {0x2F85Du, 2957u, 1u},
    {0x2F85Eu, 2958u, 1u},
    {0x2F85Fu, 2959u, 1u},
    {0x2F860u, 2960u, 1u},
    {0x2F861u, 2961u, 1u},
    {0x2F862u, 2962u, 1u},
    {0x2F863u, 2963u, 1u},
    {0x2F864u, 2964u, 1u},
    {0x2F865u, 2965u, 1u},
    {0x2F866u, 2966u, 1u},
    {0x2F867u, 2967u, 1u},
    {0x2F868u, 2968u, 1u},
    {0x2F869u, 2969u, 1u},
    {0x2F86Au, 2970u, 1u},
    {0x2F86Bu, 2971u, 1u},
    {0x2F86Cu, 2972u, 1u},
    {0x2F86Du, 2973u, 1u},
    {0x2F86Eu, 2974u, 1u},
    {0x2F86Fu, 2975u, 1u},
    {0x2F870u, 2976u, 1u},
    {0x2F871u, 2977u, 1u},
    {0x2F872u, 2978u, 1u},
    {0x2F873u, 2979u, 1u},
    {0x2F874u, 2980u, 1u},
    {0x2F875u, 2981u, 1u},
    {0x2F876u, 2982u, 1u},
    {0x2F877u, 2983u, 1u},
    {0x2F878u, 2984u, 1u},
    {0x2F879u, 2985u, 1u},
    {0x2F87Au, 2986u, 1u},
    {0x2F87Bu, 2987u, 1u},
    {0x2F87Cu, 2988u, 1u},
    {0x2F87Du, 2989u, 1u},
    {0x2F87Eu, 2990u, 1u},
    {0x2F87Fu, 2991u, 1u},
    {0x2F880u, 2992u, 1u},
    {0x2F881u, 2993u, 1u},
    {0x2F882u, 2994u, 1u},
    {0x2F883u, 2995u, 1u},
    {0x2F884u, 2996u, 1u},
    {0x2F885u, 2997u, 1u},
    {0x2F886u, 2998u, 1u},
    {0x2F887u, 2999u, 1u},
    {0x2F888u, 3000u, 1u},
    {0x2F889u, 3001u, 1u},
    {0x2F88Au, 3002u, 1u},
    {0x2F88Bu, 3003u, 1u},
    {0x2F88Cu, 3004u, 1u},
    {0x2F88Du, 3005u, 1u},
    {0x2F88Eu, 3006u, 1u},
    {0x2F88Fu, 3007u, 1u},
    {0x2F890u, 3008u, 1u},
    {0x2F891u, 3009u, 1u},
    {0x2F892u, 3010u, 1u},
    {0x2F893u, 3011u, 1u},
    {0x2F894u, 3012u, 1u},
    {0x2F895u, 3013u, 1u},
    {0x2F896u, 3014u, 1u},
    {0x2F897u, 3015u, 1u},
    {0x2F898u, 3016u, 1u},
    {0x2F899u, 3017u, 1u},
    {0x2F89Au, 3018u, 1u},
    {0x2F89Bu, 3019u, 1u},
    {0x2F89Cu, 3020u, 1u},
    {0x2F89Du, 3021u, 1u},
    {0x2F89Eu, 3022u, 1u},
    {0x2F89Fu, 3023u, 1u},
    {0x2F8A0u, 3024u, 1u},
    {0x2F8A1u, 3025u, 1u},
    {0x2F8A2u, 3026u, 1u},
    {0x2F8A3u, 3027u, 1u},
    {0x2F8A4u, 3028u, 1u},
    {0x2F8A5u, 3029u, 1u},
    {0x2F8A6u, 3030u, 1u},
    {0x2F8A7u, 3031u, 1u},
    {0x2F8A8u, 3032u, 1u},
    {0x2F8A9u, 3033u, 1u},
    {0x2F8AAu, 3034u, 1u},
    {0x2F8ABu, 3035u, 1u},
    {0x2F8ACu, 3036u, 1u},
    {0x2F8ADu, 3037u, 1u},
    {0x2F8AEu, 3038u, 1u},
    {0x2F8AFu, 3039u, 1u},
    {0x2F8B0u, 3040u, 1u},
    {0x2F8B1u, 3041u, 1u},
    {0x2F8B2u, 3042u, 1u},
    {0x2F8B3u, 3043u, 1u},
    {0x2F8B4u, 3044u, 1u},
    {0x2F8B5u, 3045u, 1u},
    {0x2F8B6u, 3046u, 1u},
    {0x2F8B7u, 3047u, 1u},
    {0x2F8B8u, 3048u, 1u},
    {0x2F8B9u, 3049u, 1u},
    {0x2F8BAu, 3050u, 1u},
    {0x2F8BBu, 3051u, 1u},
    {0x2F8BCu, 3052u, 1u},
    {0x2F8BDu, 3053u, 1u},
    {0x2F8BEu, 3054u, 1u},
    {0x2F8BFu, 3055u, 1u},
    {0x2F8C0u, 3056u, 1u},
    {0x2F8C1u, 3057u, 1u},
    {0x2F8C2u, 3058u, 1u},
    {0x2F8C3u, 3059u, 1u},
    {0x2F8C4u, 3060u, 1u},
    {0x2F8C5u, 3061u, 1u},
    {0x2F8C6u, 3062u, 1u},
    {0x2F8C7u, 3063u, 1u},
    {0x2F8C8u, 3064u, 1u},
    {0x2F8C9u, 3065u, 1u},
    {0x2F8CAu, 3066u, 1u},
    {0x2F8CBu, 3067u, 1u},
    {0x2F8CCu, 3068u, 1u},
    {0x2F8CDu, 3069u, 1u},
    {0x2F8CEu, 3070u, 1u},
    {0x2F8CFu, 3071u, 1u},
    {0x2F8D0u, 3072u, 1u},
    {0x2F8D1u, 3073u, 1u},
    {0x2F8D2u, 3074u, 1u},
    {0x2F8D3u, 3075u, 1u},
    {0x2F8D4u, 3076u, 1u},
    {0x2F8D5u, 3077u, 1u},
    {0x2F8D6u, 3078u, 1u},
    {0x2F8D7u, 3079u, 1u},
    {0x2F8D8u, 3080u, 1u},
    {0x2F8D9u, 3081u, 1u},
    {0x2F8DAu, 3082u, 1u},
    {0x2F8DBu, 3083u, 1u},
    {0x2F8DCu, 3084u, 1u},
    {0x2F8DDu, 3085u, 1u},
    {0x2F8DEu, 3086u, 1u},
    {0x2F8DFu, 3087u, 1u},
    {0x2F8E0u, 3088u, 1u},
    {0x2F8E1u, 3089u, 1u},
    {0x2F8E2u, 3090u, 1u},
    {0x2F8E3u, 3091u, 1u},
    {0x2F8E4u, 3092u, 1u},
    {0x2F8E5u, 3093u, 1u},
    {0x2F8E6u, 3094u, 1u},
    {0x2F8E7u, 3095u, 1u},
    {0x2F8E8u, 3096u, 1u},
    {0x2F8E9u, 3097u, 1u},
    {0x2F8EAu, 3098u, 1u},
    {0x2F8EBu, 3099u, 1u},
    {0x2F8ECu, 3100u, 1u},
    {0x2F8EDu, 3101u, 1u},
    {0x2F8EEu, 3102u, 1u},
    {0x2F8EFu, 3103u, 1u},
    {0x2F8F0u, 3104u, 1u},
    {0x2F8F1u, 3105u, 1u},
    {0x2F8F2u, 3106u, 1u},
    {0x2F8F3u, 3107u, 1u},
    {0x2F8F4u, 3108u, 1u},
    {0x2F8F5u, 3109u, 1u},
    {0x2F8F6u, 3110u, 1u},
    {0x2F8F7u, 3111u, 1u},
    {0x2F8F8u, 3112u, 1u},
    {0x2F8F9u, 3113u, 1u},
    {0x2F8FAu, 3114u, 1u},
    {0x2F8FBu, 3115u, 1u},
    {0x2F8FCu, 3116u, 1u},
    {0x2F8FDu, 3117u, 1u},
    {0x2F8FEu, 3118u, 1u},
    {0x2F8FFu, 3119u, 1u},
    {0x2F900u, 3120u, 1u},
    {0x2F901u, 3121u, 1u},
    {0x2F902u, 3122u, 1u},
    {0x2F903u, 3123u, 1u},
    {0x2F904u, 3124u, 1u},
    {0x2F905u, 3125u, 1u},
    {0x2F906u, 3126u, 1u},
    {0x2F907u, 3127u, 1u},
    {0x2F908u, 3128u, 1u},
    {0x2F909u, 3129u, 1u},
    {0x2F90Au, 3130u, 1u},
    {0x2F90Bu, 3131u, 1u},
    {0x2F90Cu, 3132u, 1u},
    {0x2F90Du, 3133u, 1u},
    {0x2F90Eu, 3134u, 1u},
    {0x2F90Fu, 3135u, 1u},
    {0x2F910u, 3136u, 1u},
    {0x2F911u, 3137u, 1u},
    {0x2F912u, 3138u, 1u},
    {0x2F913u, 3139u, 1u},
    {0x2F914u, 3140u, 1u},
    {0x2F915u, 3141u, 1u},
    {0x2F916u, 3142u, 1u},
    {0x2F917u, 3143u, 1u},
    {0x2F918u, 3144u, 1u},
    {0x2F919u, 3145u, 1u},
    {0x2F91Au, 3146u, 1u},
    {0x2F91Bu, 3147u, 1u},
    {0x2F91Cu, 3148u, 1u},
    {0x2F91Du, 3149u, 1u},
    {0x2F91Eu, 3150u, 1u},
    {0x2F91Fu, 3151u, 1u},
    {0x2F920u, 3152u, 1u},
    {0x2F921u, 3153u, 1u},
    {0x2F922u, 3154u, 1u},
    {0x2F923u, 3155u, 1u},
    {0x2F924u, 3156u, 1u},
    {0x2F925u, 3157u, 1u},
    {0x2F926u, 3158u, 1u},
    {0x2F927u, 3159u, 1u},
    {0x2F928u, 3160u, 1u},
    {0x2F929u, 3161u, 1u},
    {0x2F92Au, 3162u, 1u},
    {0x2F92Bu, 3163u, 1u},
    {0x2F92Cu, 3164u, 1u},
    {0x2F92Du, 3165u, 1u},
    {0x2F92Eu, 3166u, 1u},
    {0x2F92Fu, 3167u, 1u},
    {0x2F930u, 3168u, 1u},
    {0x2F931u, 3169u, 1u},
    {0x2F932u, 3170u, 1u},
    {0x2F933u, 3171u, 1u},
    {0x2F934u, 3172u, 1u},
    {0x2F935u, 3173u, 1u},
    {0x2F936u, 3174u, 1u},
    {0x2F937u, 3175u, 1u},
    {0x2F938u, 3176u, 1u},
    {0x2F939u, 3177u, 1u},
    {0x2F93Au, 3178u, 1u},
    {0x2F93Bu, 3179u, 1u},
    {0x2F93Cu, 3180u, 1u},
    {0x2F93Du, 3181u, 1u},
    {0x2F93Eu, 3182u, 1u},
    {0x2F93Fu, 3183u, 1u},
    {0x2F940u, 3184u, 1u},
    {0x2F941u, 3185u, 1u},
    {0x2F942u, 3186u, 1u},
    {0x2F943u, 3187u, 1u},
    {0x2F944u, 3188u, 1u},
    {0x2F945u, 3189u, 1u},
    {0x2F946u, 3190u, 1u},
    {0x2F947u, 3191u, 1u},
    {0x2F948u, 3192u, 1u},
    {0x2F949u, 3193u, 1u},
    {0x2F94Au, 3194u, 1u},
    {0x2F94Bu, 3195u, 1u},
    {0x2F94Cu, 3196u, 1u},
    {0x2F94Du, 3197u, 1u},
    {0x2F94Eu, 3198u, 1u},
    {0x2F94Fu, 3199u, 1u},
    {0x2F950u, 3200u, 1u},
    {0x2F951u, 3201u, 1u},
    {0x2F952u, 3202u, 1u},
    {0x2F953u, 3203u, 1u},
    {0x2F954u, 3204u, 1u},
    {0x2F955u, 3205u, 1u},
    {0x2F956u, 3206u, 1u},
    {0x2F957u, 3207u, 1u},
    {0x2F958u, 3208u, 1u},
    {0x2F959u, 3209u, 1u},
    {0x2F95Au, 3210u, 1u},
    {0x2F95Bu, 3211u, 1u},
    {0x2F95Cu, 3212u, 1u},
    {0x2F95Du, 3213u, 1u},
    {0x2F95Eu, 3214u, 1u},
    {0x2F95Fu, 3215u, 1u},
    {0x2F960u, 3216u, 1u},
    {0x2F961u, 3217u, 1u},
    {0x2F962u, 3218u, 1u},
    {0x2F963u, 3219u, 1u},
    {0x2F964u, 3220u, 1u},
    {0x2F965u, 3221u, 1u},
    {0x2F966u, 3222u, 1u},
    {0x2F967u, 3223u, 1u},
    {0x2F968u, 3224u, 1u},
    {0x2F969u, 3225u, 1u},
    {0x2F96Au, 3226u, 1u},
    {0x2F96Bu, 3227u, 1u},
    {0x2F96Cu, 3228u, 1u},
    {0x2F96Du, 3229u, 1u},
    {0x2F96Eu, 3230u, 1u},
    {0x2F96Fu, 3231u, 1u},
    {0x2F970u, 3232u, 1u},
    {0x2F971u, 3233u, 1u},
    {0x2F972u, 3234u, 1u},
    {0x2F973u, 3235u, 1u},
    {0x2F974u, 3236u, 1u},
    {0x2F975u, 3237u, 1u},
    {0x2F976u, 3238u, 1u},
    {0x2F977u, 3239u, 1u},
    {0x2F978u, 3240u, 1u},
    {0x2F979u, 3241u, 1u},
    {0x2F97Au, 3242u, 1u},
    {0x2F97Bu, 3243u, 1u},
    {0x2F97Cu, 3244u, 1u},
    {0x2F97Du, 3245u, 1u},
    {0x2F97Eu, 3246u, 1u},
    {0x2F97Fu, 3247u, 1u},
    {0x2F980u, 3248u, 1u},
    {0x2F981u, 3249u, 1u},
    {0x2F982u, 3250u, 1u},
    {0x2F983u, 3251u, 1u},
    {0x2F984u, 3252u, 1u},
    {0x2F985u, 3253u, 1u},
    {0x2F986u, 3254u, 1u},
    {0x2F987u, 3255u, 1u},
    {0x2F988u, 3256u, 1u},
    {0x2F989u, 3257u, 1u},
    {0x2F98Au, 3258u, 1u},
    {0x2F98Bu, 3259u, 1u},
    {0x2F98Cu, 3260u, 1u},
    {0x2F98Du, 3261u, 1u},
    {0x2F98Eu, 3262u, 1u},
    {0x2F98Fu, 3263u, 1u},
    {0x2F990u, 3264u, 1u},
    {0x2F991u, 3265u, 1u},
    {0x2F992u, 3266u, 1u},
    {0x2F993u, 3267u, 1u},
    {0x2F994u, 3268u, 1u},
    {0x2F995u, 3269u, 1u},
    {0x2F996u, 3270u, 1u},
    {0x2F997u, 3271u, 1u},
    {0x2F998u, 3272u, 1u},
    {0x2F999u, 3273u, 1u},
    {0x2F99Au, 3274u, 1u},
    {0x2F99Bu, 3275u, 1u},
    {0x2F99Cu, 3276u, 1u},
    {0x2F99Du, 3277u, 1u},
    {0x2F99Eu, 3278u, 1u},
    {0x2F99Fu, 3279u, 1u},
    {0x2F9A0u, 3280u, 1u},
    {0x2F9A1u, 3281u, 1u},
    {0x2F9A2u, 3282u, 1u},
    {0x2F9A3u, 3283u, 1u},
    {0x2F9A4u, 3284u, 1u},
    {0x2F9A5u, 3285u, 1u},
    {0x2F9A6u, 3286u, 1u},
    {0x2F9A7u, 3287u, 1u},
    {0x2F9A8u, 3288u, 1u},
    {0x2F9A9u, 3289u, 1u},
    {0x2F9AAu, 3290u, 1u},
    {0x2F9ABu, 3291u, 1u},
    {0x2F9ACu, 3292u, 1u},
    {0x2F9ADu, 3293u, 1u},
    {0x2F9AEu, 3294u, 1u},
    {0x2F9AFu, 3295u, 1u},
    {0x2F9B0u, 3296u, 1u},
    {0x2F9B1u, 3297u, 1u},
    {0x2F9B2u, 3298u, 1u},
    {0x2F9B3u, 3299u, 1u},
    {0x2F9B4u, 3300u, 1u},
    {0x2F9B5u, 3301u, 1u},
    {0x2F9B6u, 3302u, 1u},
    {0x2F9B7u, 3303u, 1u},
    {0x2F9B8u, 3304u, 1u},
    {0x2F9B9u, 3305u, 1u},
    {0x2F9BAu, 3306u, 1u},
    {0x2F9BBu, 3307u, 1u},
    {0x2F9BCu, 3308u, 1u},
    {0x2F9BDu, 3309u, 1u},
    {0x2F9BEu, 3310u, 1u},
    {0x2F9BFu, 3311u, 1u},
    {0x2F9C0u, 3312u, 1u},
    {0x2F9C1u, 3313u, 1u},
    {0x2F9C2u, 3314u, 1u},
    {0x2F9C3u, 3315u, 1u},
    {0x2F9C4u, 3316u, 1u},
    {0x2F9C5u, 3317u, 1u},
    {0x2F9C6u, 3318u, 1u},
    {0x2F9C7u, 3319u, 1u},
    {0x2F9C8u, 3320u, 1u},
    {0x2F9C9u, 3321u, 1u},
    {0x2F9CAu, 3322u, 1u},
    {0x2F9CBu, 3323u, 1u},
    {0x2F9CCu, 3324u, 1u},
    {0x2F9CDu, 3325u, 1u},
    {0x2F9CEu, 3326u, 1u},
    {0x2F9CFu, 3327u, 1u},
    {0x2F9D0u, 3328u, 1u},
    {0x2F9D1u, 3329u, 1u},
    {0x2F9D2u, 3330u, 1u},
    {0x2F9D3u, 3331u, 1u},
    {0x2F9D4u, 3332u, 1u},
    {0x2F9D5u, 3333u, 1u},
    {0x2F9D6u, 3334u, 1u},
    {0x2F9D7u, 3335u, 1u},
    {0x2F9D8u, 3336u, 1u},
    {0x2F9D9u, 3337u, 1u},
    {0x2F9DAu, 3338u, 1u},
    {0x2F9DBu, 3339u, 1u},
    {0x2F9DCu, 3340u, 1u},
    {0x2F9DDu, 3341u, 1u},
    {0x2F9DEu, 3342u, 1u},
    {0x2F9DFu, 3343u, 1u},
    {0x2F9E0u, 3344u, 1u},
    {0x2F9E1u, 3345u, 1u},
    {0x2F9E2u, 3346u, 1u},
    {0x2F9E3u, 3347u, 1u},
    {0x2F9E4u, 3348u, 1u},
    {0x2F9E5u, 3349u, 1u},
    {0x2F9E6u, 3350u, 1u},
    {0x2F9E7u, 3351u, 1u},
    {0x2F9E8u, 3352u, 1u},
    {0x2F9E9u, 3353u, 1u},
    {0x2F9EAu, 3354u, 1u},
    {0x2F9EBu, 3355u, 1u},
    {0x2F9ECu, 3356u, 1u},
    {0x2F9EDu, 3357u, 1u},
    {0x2F9EEu, 3358u, 1u},
    {0x2F9EFu, 3359u, 1u},
    {0x2F9F0u, 3360u, 1u},
    {0x2F9F1u, 3361u, 1u},
    {0x2F9F2u, 3362u, 1u},
    {0x2F9F3u, 3363u, 1u},
    {0x2F9F4u, 3364u, 1u},
    {0x2F9F5u, 3365u, 1u},
    {0x2F9F6u, 3366u, 1u},
    {0x2F9F7u, 3367u, 1u},
    {0x2F9F8u, 3368u, 1u},
    {0x2F9F9u, 3369u, 1u},
    {0x2F9FAu, 3370u, 1u},
    {0x2F9FBu, 3371u, 1u},
    {0x2F9FCu, 3372u, 1u},
    {0x2F9FDu, 3373u, 1u},
    {0x2F9FEu, 3374u, 1u},
    {0x2F9FFu, 3375u, 1u},
    {0x2FA00u, 3376u, 1u},
    {0x2FA01u, 3377u, 1u},
    {0x2FA02u, 3378u, 1u},
    {0x2FA03u, 3379u, 1u},
    {0x2FA04u, 3380u, 1u},
    {0x2FA05u, 3381u, 1u},
    {0x2FA06u, 3382u, 1u},
    {0x2FA07u, 3383u, 1u},
    {0x2FA08u, 3384u, 1u},
    {0x2FA09u, 3385u, 1u},
    {0x2FA0Au, 3386u, 1u},
    {0x2FA0Bu, 3387u, 1u},
    {0x2FA0Cu, 3388u, 1u},
    {0x2FA0Du, 3389u, 1u},
    {0x2FA0Eu, 3390u, 1u},
    {0x2FA0Fu, 3391u, 1u},
    {0x2FA10u, 3392u, 1u},
    {0x2FA11u, 3393u, 1u},
    {0x2FA12u, 3394u, 1u},
    {0x2FA13u, 3395u, 1u},
    {0x2FA14u, 3396u, 1u},
    {0x2FA15u, 3397u, 1u},
    {0x2FA16u, 3398u, 1u},
    {0x2FA17u, 3399u, 1u},
    {0x2FA18u, 3400u, 1u},
    {0x2FA19u, 3401u, 1u},
    {0x2FA1Au, 3402u, 1u},
    {0x2FA1Bu, 3403u, 1u},
    {0x2FA1Cu, 3404u, 1u},
    {0x2FA1Du, 3405u, 1u},
};
const std::size_t kDecompCount = 2061;

const MapEntry kLower[] = {
    {0x41u, 3406u, 1u},
    {0x42u, 3407u, 1u},
    {0x43u, 3408u, 1u},
    {0x44u, 3409u, 1u},
    {0x45u, 3410u, 1u},
    {0x46u, 3411u, 1u},
    {0x47u, 3412u, 1u},
    {0x48u, 3413u, 1u},
    {0x49u, 3414u, 1u},
    {0x4Au, 3415u, 1u},
    {0x4Bu, 3416u, 1u},
    {0x4Cu, 3417u, 1u},
    {0x4Du, 3418u, 1u},
    {0x4Eu, 3419u, 1u},
    {0x4Fu, 3420u, 1u},
    {0x50u, 3421u, 1u},
    {0x51u, 3422u, 1u},
    {0x52u, 3423u, 1u},
    {0x53u, 3424u, 1u},
    {0x54u, 3425u, 1u},
    {0x55u, 3426u, 1u},
    {0x56u, 3427u, 1u},
    {0x57u, 3428u, 1u},
    {0x58u, 3429u, 1u},
    {0x59u, 3430u, 1u},
    {0x5Au, 3431u, 1u},
    {0xC0u, 3432u, 1u},
    {0xC1u, 3433u, 1u},
    {0xC2u, 3434u, 1u},
    {0xC3u, 3435u, 1u},
    {0xC4u, 3436u, 1u},
    {0xC5u, 3437u, 1u},
    {0xC6u, 3438u, 1u},
    {0xC7u, 3439u, 1u},
    {0xC8u, 3440u, 1u},
    {0xC9u, 3441u, 1u},
    {0xCAu, 3442u, 1u},
    {0xCBu, 3443u, 1u},
    {0xCCu, 3444u, 1u},
    {0xCDu, 3445u, 1u},
    {0xCEu, 3446u, 1u},
    {0xCFu, 3447u, 1u},
    {0xD0u, 3448u, 1u},
    {0xD1u, 3449u, 1u},
    {0xD2u, 3450u, 1u},
    {0xD3u, 3451u, 1u},
    {0xD4u, 3452u, 1u},
    {0xD5u, 3453u, 1u},
    {0xD6u, 3454u, 1u},
    {0xD8u, 3455u, 1u},
    {0xD9u, 3456u, 1u},
    {0xDAu, 3457u, 1u},
    {0xDBu, 3458u, 1u},
    {0xDCu, 3459u, 1u},
    {0xDDu, 3460u, 1u},
    {0xDEu, 3461u, 1u},
    {0x100u, 3462u, 1u},
    {0x102u, 3463u, 1u},
    {0x104u, 3464u, 1u},
    {0x106u, 3465u, 1u},
    {0x108u, 3466u, 1u},
    {0x10Au, 3467u, 1u},
    {0x10Cu, 3468u, 1u},
    {0x10Eu, 3469u, 1u},
    {0x110u, 3470u, 1u},
    {0x112u, 3471u, 1u},
    {0x114u, 3472u, 1u},
    {0x116u, 3473u, 1u},
    {0x118u, 3474u, 1u},
    {0x11Au, 3475u, 1u},
    {0x11Cu, 3476u, 1u},
    {0x11Eu, 3477u, 1u},
    {0x120u, 3478u, 1u},
    {0x122u, 3479u, 1u},
    {0x124u, 3480u, 1u},
    {0x126u, 3481u, 1u},
    {0x128u, 3482u, 1u},
    {0x12Au, 3483u, 1u},
    {0x12Cu, 3484u, 1u},
    {0x12Eu, 3485u, 1u},
    {0x130u, 3486u, 2u},
    {0x132u, 3488u, 1u},
    {0x134u, 3489u, 1u},
    {0x136u, 3490u, 1u},
    {0x139u, 3491u, 1u},
    {0x13Bu, 3492u, 1u},
    {0x13Du, 3493u, 1u},
    {0x13Fu, 3494u, 1u},
    {0x141u, 3495u, 1u},
    {0x143u, 3496u, 1u},
    {0x145u, 3497u, 1u},
    {0x147u, 3498u, 1u},
    {0x14Au, 3499u, 1u},
    {0x14Cu, 3500u, 1u},
    {0x14Eu, 3501u, 1u},
    {0x150u, 3502u, 1u},
    {0x152u, 3503u, 1u},
    {0x154u, 3504u, 1u},
    {0x156u, 3505u, 1u},
    {0x158u, 3506u, 1u},
    {0x15Au, 3507u, 1u},
    {0x15Cu, 3508u, 1u},
    {0x15Eu, 3509u, 1u},
    {0x160u, 3510u, 1u},
    {0x162u, 3511u, 1u},
    {0x164u, 3512u, 1u},
    {0x166u, 3513u, 1u},
    {0x168u, 3514u, 1u},
    {0x16Au, 3515u, 1u},
    {0x16Cu, 3516u, 1u},
    {0x16Eu, 3517u, 1u},
    {0x170u, 3518u, 1u},
    {0x172u, 3519u, 1u},
    {0x174u, 3520u, 1u},
    {0x176u, 3521u, 1u},
    {0x178u, 3522u, 1u},
    {0x179u, 3523u, 1u},
    {0x17Bu, 3524u, 1u},
    {0x17Du, 3525u, 1u},
    {0x181u, 3526u, 1u},
    {0x182u, 3527u, 1u},
    {0x184u, 3528u, 1u},
    {0x186u, 3529u, 1u},
    {0x187u, 3530u, 1u},
    {0x189u, 3531u, 1u},
    {0x18Au, 3532u, 1u},
    {0x18Bu, 3533u, 1u},
    {0x18Eu, 3534u, 1u},
    {0x18Fu, 3535u, 1u},
    {0x190u, 3536u, 1u},
    {0x191u, 3537u, 1u},
    {0x193u, 3538u, 1u},
    {0x194u, 3539u, 1u},
    {0x196u, 3540u, 1u},
    {0x197u, 3541u, 1u},
    {0x198u, 3542u, 1u},
    {0x19Cu, 3543u, 1u},
    {0x19Du, 3544u, 1u},
    {0x19Fu, 3545u, 1u},
    {0x1A0u, 3546u, 1u},
    {0x1A2u, 3547u, 1u},
    {0x1A4u, 3548u, 1u},
    {0x1A6u, 3549u, 1u},
    {0x1A7u, 3550u, 1u},
    {0x1A9u, 3551u, 1u},
    {0x1ACu, 3552u, 1u},
    {0x1AEu, 3553u, 1u},
    {0x1AFu, 3554u, 1u},
    {0x1B1u, 3555u, 1u},
    {0x1B2u, 3556u, 1u},
    {0x1B3u, 3557u, 1u},
    {0x1B5u, 3558u, 1u},
    {0x1B7u, 3559u, 1u},
    {0x1B8u, 3560u, 1u},
    {0x1BCu, 3561u, 1u},
    {0x1C4u, 3562u, 1u},
    {0x1C5u, 3563u, 1u},
    {0x1C7u, 3564u, 1u},
    {0x1C8u, 3565u, 1u},
    {0x1CAu, 3566u, 1u},
    {0x1CBu, 3567u, 1u},
    {0x1CDu, 3568u, 1u},
    {0x1CFu, 3569u, 1u},
    {0x1D1u, 3570u, 1u},
    {0x1D3u, 3571u, 1u},
    {0x1D5u, 3572u, 1u},
    {0x1D7u, 3573u, 1u},
    {0x1D9u, 3574u, 1u},
    {0x1DBu, 3575u, 1u},
    {0x1DEu, 3576u, 1u},
    {0x1E0u, 3577u, 1u},
    {0x1E2u, 3578u, 1u},
    {0x1E4u, 3579u, 1u},
    {0x1E6u, 3580u, 1u},
    {0x1E8u, 3581u, 1u},
    {0x1EAu, 3582u, 1u},
    {0x1ECu, 3583u, 1u},
    {0x1EEu, 3584u, 1u},
    {0x1F1u, 3585u, 1u},
    {0x1F2u, 3586u, 1u},
    {0x1F4u, 3587u, 1u},
    {0x1F6u, 3588u, 1u},
    {0x1F7u, 3589u, 1u},
    {0x1F8u, 3590u, 1u},
    {0x1FAu, 3591u, 1u},
    {0x1FCu, 3592u, 1u},
    {0x1FEu, 3593u, 1u},
    {0x200u, 3594u, 1u},
    {0x202u, 3595u, 1u},
    {0x204u, 3596u, 1u},
    {0x206u, 3597u, 1u},
    {0x208u, 3598u, 1u},
    {0x20Au, 3599u, 1u},
    {0x20Cu, 3600u, 1u},
    {0x20Eu, 3601u, 1u},
    {0x210u, 3602u, 1u},
    {0x212u, 3603u, 1u},
    {0x214u, 3604u, 1u},
    {0x216u, 3605u, 1u},
    {0x218u, 3606u, 1u},
    {0x21Au, 3607u, 1u},
    {0x21Cu, 3608u, 1u},
    {0x21Eu, 3609u, 1u},
    {0x220u, 3610u, 1u},
    {0x222u, 3611u, 1u},
    {0x224u, 3612u, 1u},
    {0x226u, 3613u, 1u},
    {0x228u, 3614u, 1u},
    {0x22Au, 3615u, 1u},
    {0x22Cu, 3616u, 1u},
    {0x22Eu, 3617u, 1u},
    {0x230u, 3618u, 1u},
    {0x232u, 3619u, 1u},
    {0x23Au, 3620u, 1u},
    {0x23Bu, 3621u, 1u},
    {0x23Du, 3622u, 1u},
    {0x23Eu, 3623u, 1u},
    {0x241u, 3624u, 1u},
    {0x243u, 3625u, 1u},
    {0x244u, 3626u, 1u},
    {0x245u, 3627u, 1u},
    {0x246u, 3628u, 1u},
    {0x248u, 3629u, 1u},
    {0x24Au, 3630u, 1u},
    {0x24Cu, 3631u, 1u},
    {0x24Eu, 3632u, 1u},
    {0x370u, 3633u, 1u},
    {0x372u, 3634u, 1u},
    {0x376u, 3635u, 1u},
    {0x37Fu, 3636u, 1u},
    {0x386u, 3637u, 1u},
    {0x388u, 3638u, 1u},
    {0x389u, 3639u, 1u},
    {0x38Au, 3640u, 1u},
    {0x38Cu, 3641u, 1u},
    {0x38Eu, 3642u, 1u},
    {0x38Fu, 3643u, 1u},
    {0x391u, 3644u, 1u},
    {0x392u, 3645u, 1u},
    {0x393u, 3646u, 1u},
    {0x394u, 3647u, 1u},
    {0x395u, 3648u, 1u},
    {0x396u, 3649u, 1u},
    {0x397u, 3650u, 1u},
    {0x398u, 3651u, 1u},
    {0x399u, 3652u, 1u},
    {0x39Au, 3653u, 1u},
    {0x39Bu, 3654u, 1u},
    {0x39Cu, 3655u, 1u},
    {0x39Du, 3656u, 1u},
    {0x39Eu, 3657u, 1u},
    {0x39Fu, 3658u, 1u},
    {0x3A0u, 3659u, 1u},
    {0x3A1u, 3660u, 1u},
    {0x3A3u, 3661u, 1u},
    {0x3A4u, 3662u, 1u},
    {0x3A5u, 3663u, 1u},
    {0x3A6u, 3664u, 1u},
    {0x3A7u, 3665u, 1u},
    {0x3A8u, 3666u, 1u},
    {0x3A9u, 3667u, 1u},
    {0x3AAu, 3668u, 1u},
    {0x3ABu, 3669u, 1u},
    {0x3CFu, 3670u, 1u},
    {0x3D8u, 3671u, 1u},
    {0x3DAu, 3672u, 1u},
    {0x3DCu, 3673u, 1u},
    {0x3DEu, 3674u, 1u},
    {0x3E0u, 3675u, 1u},
    {0x3E2u, 3676u, 1u},
    {0x3E4u, 3677u, 1u},
    {0x3E6u, 3678u, 1u},
    {0x3E8u, 3679u, 1u},
    {0x3EAu, 3680u, 1u},
    {0x3ECu, 3681u, 1u},
    {0x3EEu, 3682u, 1u},
    {0x3F4u, 3683u, 1u},
    {0x3F7u, 3684u, 1u},
    {0x3F9u, 3685u, 1u},
    {0x3FAu, 3686u, 1u},
    {0x3FDu, 3687u, 1u},
    {0x3FEu, 3688u, 1u},
    {0x3FFu, 3689u, 1u},
    {0x400u, 3690u, 1u},
    {0x401u, 3691u, 1u},
    {0x402u, 3692u, 1u},
    {0x403u, 3693u, 1u},
    {0x404u, 3694u, 1u},
    {0x405u, 3695u, 1u},
    {0x406u, 3696u, 1u},
    {0x407u, 3697u, 1u},
    {0x408u, 3698u, 1u},
    {0x409u, 3699u, 1u},
    {0x40Au, 3700u, 1u},
    {0x40Bu, 3701u, 1u},
    {0x40Cu, 3702u, 1u},
    {0x40Du, 3703u, 1u},
    {0x40Eu, 3704u, 1u},
    {0x40Fu, 3705u, 1u},
    {0x410u, 3706u, 1u},
    {0x411u, 3707u, 1u},
    {0x412u, 3708u, 1u},
    {0x413u, 3709u, 1u},
    {0x414u, 3710u, 1u},
    {0x415u, 3711u, 1u},
    {0x416u, 3712u, 1u},
    {0x417u, 3713u, 1u},
    {0x418u, 3714u, 1u},
    {0x419u, 3715u, 1u},
    {0x41Au, 3716u, 1u},
    {0x41Bu, 3717u, 1u},
    {0x41Cu, 3718u, 1u},
    {0x41Du, 3719u, 1u},
    {0x41Eu, 3720u, 1u},
    {0x41Fu, 3721u, 1u},
    {0x420u, 3722u, 1u},
    {0x421u, 3723u, 1u},
    {0x422u, 3724u, 1u},
    {0x423u, 3725u, 1u},
    {0x424u, 3726u, 1u},
    {0x425u, 3727u, 1u},
    {0x426u, 3728u, 1u},
    {0x427u, 3729u, 1u},
    {0x428u, 3730u, 1u},
    {0x429u, 3731u, 1u},
    {0x42Au, 3732u, 1u},
    {0x42Bu, 3733u, 1u},
    {0x42Cu, 3734u, 1u},
    {0x42Du, 3735u, 1u},
    {0x42Eu, 3736u, 1u},
    {0x42Fu, 3737u, 1u},
    {0x460u, 3738u, 1u},
    {0x462u, 3739u, 1u},
    {0x464u, 3740u, 1u},
    {0x466u, 3741u, 1u},
    {0x468u, 3742u, 1u},
    {0x46Au, 3743u, 1u},
    {0x46Cu, 3744u, 1u},
    {0x46Eu, 3745u, 1u},
    {0x470u, 3746u, 1u},
    {0x472u, 3747u, 1u},
    {0x474u, 3748u, 1u},
    {0x476u, 3749u, 1u},
    {0x478u, 3750u, 1u},
    {0x47Au, 3751u, 1u},
    {0x47Cu, 3752u, 1u},
    {0x47Eu, 3753u, 1u},
    {0x480u, 3754u, 1u},
    {0x48Au, 3755u, 1u},
    {0x48Cu, 3756u, 1u},
    {0x48Eu, 3757u, 1u},
    {0x490u, 3758u, 1u},
    {0x492u, 3759u, 1u},
    {0x494u, 3760u, 1u},
    {0x496u, 3761u, 1u},
    {0x498u, 3762u, 1u},
    {0x49Au, 3763u, 1u},
    {0x49Cu, 3764u, 1u},
    {0x49Eu, 3765u, 1u},
    {0x4A0u, 3766u, 1u},
    {0x4A2u, 3767u, 1u},
    {0x4A4u, 3768u, 1u},
    {0x4A6u, 3769u, 1u},
    {0x4A8u, 3770u, 1u},
    {0x4AAu, 3771u, 1u},
    {0x4ACu, 3772u, 1u},
    {0x4AEu, 3773u, 1u},
    {0x4B0u, 3774u, 1u},
    {0x4B2u, 3775u, 1u},
    {0x4B4u, 3776u, 1u},
    {0x4B6u, 3777u, 1u},
    {0x4B8u, 3778u, 1u},
    {0x4BAu, 3779u, 1u},
    {0x4BCu, 3780u, 1u},
    {0x4BEu, 3781u, 1u},
    {0x4C0u, 3782u, 1u},
    {0x4C1u, 3783u, 1u},
    {0x4C3u, 3784u, 1u},
    {0x4C5u, 3785u, 1u},
    {0x4C7u, 3786u, 1u},
    {0x4C9u, 3787u, 1u},
    {0x4CBu, 3788u, 1u},
    {0x4CDu, 3789u, 1u},
    {0x4D0u, 3790u, 1u},
    {0x4D2u, 3791u, 1u},
    {0x4D4u, 3792u, 1u},
    {0x4D6u, 3793u, 1u},
    {0x4D8u, 3794u, 1u},
    {0x4DAu, 3795u, 1u},
    {0x4DCu, 3796u, 1u},
    {0x4DEu, 3797u, 1u},
    {0x4E0u, 3798u, 1u},
    {0x4E2u, 3799u, 1u},
    {0x4E4u, 3800u, 1u},
    {0x4E6u, 3801u, 1u},
    {0x4E8u, 3802u, 1u},
    {0x4EAu, 3803u, 1u},
    {0x4ECu, 3804u, 1u},
    {0x4EEu, 3805u, 1u},
    {0x4F0u, 3806u, 1u},
    {0x4F2u, 3807u, 1u},
    {0x4F4u, 3808u, 1u},
    {0x4F6u, 3809u, 1u},
    {0x4F8u, 3810u, 1u},
    {0x4FAu, 3811u, 1u},
    {0x4FCu, 3812u, 1u},
    {0x4FEu, 3813u, 1u},
    {0x500u, 3814u, 1u},
    {0x502u, 3815u, 1u},
    {0x504u, 3816u, 1u},
    {0x506u, 3817u, 1u},
    {0x508u, 3818u, 1u},
    {0x50Au, 3819u, 1u},
    {0x50Cu, 3820u, 1u},
    {0x50Eu, 3821u, 1u},
    {0x510u, 3822u, 1u},
    {0x512u, 3823u, 1u},
    {0x514u, 3824u, 1u},
    {0x516u, 3825u, 1u},
    {0x518u, 3826u, 1u},
    {0x51Au, 3827u, 1u},
    {0x51Cu, 3828u, 1u},
    {0x51Eu, 3829u, 1u},
    {0x520u, 3830u, 1u},
    {0x522u, 3831u, 1u},
    {0x524u, 3832u, 1u},
    {0x526u, 3833u, 1u},
    {0x528u, 3834u, 1u},
    {0x52Au, 3835u, 1u},
    {0x52Cu, 3836u, 1u},
    {0x52Eu, 3837u, 1u},
    {0x531u, 3838u, 1u},
    {0x532u, 3839u, 1u},
    {0x533u, 3840u, 1u},
    {0x534u, 3841u, 1u},
    {0x535u, 3842u, 1u},
    {0x536u, 3843u, 1u},
    {0x537u, 3844u, 1u},
    {0x538u, 3845u, 1u},
    {0x539u, 3846u, 1u},
    {0x53Au, 3847u, 1u},
    {0x53Bu, 3848u, 1u},
    {0x53Cu, 3849u, 1u},
    {0x53Du, 3850u, 1u},
    {0x53Eu, 3851u, 1u},
    {0x53Fu, 3852u, 1u},
    {0x540u, 3853u, 1u},
    {0x541u, 3854u, 1u},
    {0x542u, 3855u, 1u},
    {0x543u, 3856u, 1u},
    {0x544u, 3857u, 1u},
    {0x545u, 3858u, 1u},
    {0x546u, 3859u, 1u},
    {0x547u, 3860u, 1u},
    {0x548u, 3861u, 1u},
    {0x549u, 3862u, 1u},
    {0x54Au, 3863u, 1u},
    {0x54Bu, 3864u, 1u},
    {0x54Cu, 3865u, 1u},
    {0x54Du, 3866u, 1u},
    {0x54Eu, 3867u, 1u},
    {0x54Fu, 3868u, 1u},
    {0x550u, 3869u, 1u},
    {0x551u, 3870u, 1u},
    {0x552u, 3871u, 1u},
    {0x553u, 3872u, 1u},
    {0x554u, 3873u, 1u},
    {0x555u, 3874u, 1u},
    {0x556u, 3875u, 1u},
    {0x10A0u, 3876u, 1u},
    {0x10A1u, 3877u, 1u},
    {0x10A2u, 3878u, 1u},
    {0x10A3u, 3879u, 1u},
    {0x10A4u, 3880u, 1u},
    {0x10A5u, 3881u, 1u},
    {0x10A6u, 3882u, 1u},
    {0x10A7u, 3883u, 1u},
    {0x10A8u, 3884u, 1u},
    {0x10A9u, 3885u, 1u},
    {0x10AAu, 3886u, 1u},
    {0x10ABu, 3887u, 1u},
    {0x10ACu, 3888u, 1u},
    {0x10ADu, 3889u, 1u},
    {0x10AEu, 3890u, 1u},
    {0x10AFu, 3891u, 1u},
    {0x10B0u, 3892u, 1u},
    {0x10B1u, 3893u, 1u},
    {0x10B2u, 3894u, 1u},
    {0x10B3u, 3895u, 1u},
    {0x10B4u, 3896u, 1u},
    {0x10B5u, 3897u, 1u},
    {0x10B6u, 3898u, 1u},
    {0x10B7u, 3899u, 1u},
    {0x10B8u, 3900u, 1u},
    {0x10B9u, 3901u, 1u},
    {0x10BAu, 3902u, 1u},
    {0x10BBu, 3903u, 1u},
    {0x10BCu, 3904u, 1u},
    {0x10BDu, 3905u, 1u},
    {0x10BEu, 3906u, 1u},
    {0x10BFu, 3907u, 1u},
    {0x10C0u, 3908u, 1u},
    {0x10C1u, 3909u, 1u},
    {0x10C2u, 3910u, 1u},
    {0x10C3u, 3911u, 1u},
    {0x10C4u, 3912u, 1u},
    {0x10C5u, 3913u, 1u},
    {0x10C7u, 3914u, 1u},
    {0x10CDu, 3915u, 1u},
    {0x13A0u, 3916u, 1u},
    {0x13A1u, 3917u, 1u},
    {0x13A2u, 3918u, 1u},
    {0x13A3u, 3919u, 1u},
    {0x13A4u, 3920u, 1u},
    {0x13A5u, 3921u, 1u},
    {0x13A6u, 3922u, 1u},
    {0x13A7u, 3923u, 1u},
    {0x13A8u, 3924u, 1u},
    {0x13A9u, 3925u, 1u},
    {0x13AAu, 3926u, 1u},
    {0x13ABu, 3927u, 1u},
    {0x13ACu, 3928u, 1u},
    {0x13ADu, 3929u, 1u},
    {0x13AEu, 3930u, 1u},
    {0x13AFu, 3931u, 1u},
    {0x13B0u, 3932u, 1u},
    {0x13B1u, 3933u, 1u},
    {0x13B2u, 3934u, 1u},
    {0x13B3u, 3935u, 1u},
    {0x13B4u, 3936u, 1u},
    {0x13B5u, 3937u, 1u},
    {0x13B6u, 3938u, 1u},
    {0x13B7u, 3939u, 1u},
    {0x13B8u, 3940u, 1u},
    {0x13B9u, 3941u, 1u},
    {0x13BAu, 3942u, 1u},
    {0x13BBu, 3943u, 1u},
    {0x13BCu, 3944u, 1u},
    {0x13BDu, 3945u, 1u},
    {0x13BEu, 3946u, 1u},
    {0x13BFu, 3947u, 1u},
    {0x13C0u, 3948u, 1u},
    {0x13C1u, 3949u, 1u},
    {0x13C2u, 3950u, 1u},
    {0x13C3u, 3951u, 1u},
    {0x13C4u, 3952u, 1u},
    {0x13C5u, 3953u, 1u},
    {0x13C6u, 3954u, 1u},
    {0x13C7u, 3955u, 1u},
    {0x13C8u, 3956u, 1u},
    {0x13C9u, 3957u, 1u},
    {0x13CAu, 3958u, 1u},
    {0x13CBu, 3959u, 1u},
    {0x13CCu, 3960u, 1u},
    {0x13CDu, 3961u, 1u},
    {0x13CEu, 3962u, 1u},
    {0x13CFu, 3963u, 1u},
    {0x13D0u, 3964u, 1u},
    {0x13D1u, 3965u, 1u},
    {0x13D2u, 3966u, 1u},
    {0x13D3u, 3967u, 1u},
    {0x13D4u, 3968u, 1u},
    {0x13D5u, 3969u, 1u},
    {0x13D6u, 3970u, 1u},
    {0x13D7u, 3971u, 1u},
    {0x13D8u, 3972u, 1u},
    {0x13D9u, 3973u, 1u},
    {0x13DAu, 3974u, 1u},
    {0x13DBu, 3975u, 1u},
    {0x13DCu, 3976u, 1u},
    {0x13DDu, 3977u, 1u},
    {0x13DEu, 3978u, 1u},
    {0x13DFu, 3979u, 1u},
    {0x13E0u, 3980u, 1u},
    {0x13E1u, 3981u, 1u},
    {0x13E2u, 3982u, 1u},
    {0x13E3u, 3983u, 1u},
    {0x13E4u, 3984u, 1u},
    {0x13E5u, 3985u, 1u},
    {0x13E6u, 3986u, 1u},
    {0x13E7u, 3987u, 1u},
    {0x13E8u, 3988u, 1u},
    {0x13E9u, 3989u, 1u},
    {0x13EAu, 3990u, 1u},
    {0x13EBu, 3991u, 1u},
    {0x13ECu, 3992u, 1u},
    {0x13EDu, 3993u, 1u},
    {0x13EEu, 3994u, 1u},
    {0x13EFu, 3995u, 1u},
    {0x13F0u, 3996u, 1u},
    {0x13F1u, 3997u, 1u},
    {0x13F2u, 3998u, 1u},
    {0x13F3u, 3999u, 1u},
    {0x13F4u, 4000u, 1u},
    {0x13F5u, 4001u, 1u},
    {0x1C90u, 4002u, 1u},
    {0x1C91u, 4003u, 1u},
    {0x1C92u, 4004u, 1u},
    {0x1C93u, 4005u, 1u},
    {0x1C94u, 4006u, 1u},
    {0x1C95u, 4007u, 1u},
    {0x1C96u, 4008u, 1u},
    {0x1C97u, 4009u, 1u},
    {0x1C98u, 4010u, 1u},
    {0x1C99u, 4011u, 1u},
    {0x1C9Au, 4012u, 1u},
    {0x1C9Bu, 4013u, 1u},
    {0x1C9Cu, 4014u, 1u},
    {0x1C9Du, 4015u, 1u},
    {0x1C9Eu, 4016u, 1u},
    {0x1C9Fu, 4017u, 1u},
    {0x1CA0u, 4018u, 1u},
    {0x1CA1u, 4019u, 1u},
    {0x1CA2u, 4020u, 1u},
    {0x1CA3u, 4021u, 1u},
    {0x1CA4u, 4022u, 1u},
    {0x1CA5u, 4023u, 1u},
    {0x1CA6u, 4024u, 1u},
    {0x1CA7u, 4025u, 1u},
    {0x1CA8u, 4026u, 1u},
    {0x1CA9u, 4027u, 1u},
    {0x1CAAu, 4028u, 1u},
    {0x1CABu, 4029u, 1u},
    {0x1CACu, 4030u, 1u},
    {0x1CADu, 4031u, 1u},
    {0x1CAEu, 4032u, 1u},
    {0x1CAFu, 4033u, 1u},
    {0x1CB0u, 4034u, 1u},
    {0x1CB1u, 4035u, 1u},
    {0x1CB2u, 4036u, 1u},
    {0x1CB3u, 4037u, 1u},
    {0x1CB4u, 4038u, 1u},
    {0x1CB5u, 4039u, 1u},
    {0x1CB6u, 4040u, 1u},
    {0x1CB7u, 4041u, 1u},
    {0x1CB8u, 4042u, 1u},
    {0x1CB9u, 4043u, 1u},
    {0x1CBAu, 4044u, 1u},
    {0x1CBDu, 4045u, 1u},
    {0x1CBEu, 4046u, 1u},
    {0x1CBFu, 4047u, 1u},
    {0x1E00u, 4048u, 1u},
    {0x1E02u, 4049u, 1u},
    {0x1E04u, 4050u, 1u},
    {0x1E06u, 4051u, 1u},
    {0x1E08u, 4052u, 1u},
    {0x1E0Au, 4053u, 1u},
    {0x1E0Cu, 4054u, 1u},
    {0x1E0Eu, 4055u, 1u},
    {0x1E10u, 4056u, 1u},
    {0x1E12u, 4057u, 1u},
    {0x1E14u, 4058u, 1u},
    {0x1E16u, 4059u, 1u},
    {0x1E18u, 4060u, 1u},
    {0x1E1Au, 4061u, 1u},
    {0x1E1Cu, 4062u, 1u},
    {0x1E1Eu, 4063u, 1u},
    {0x1E20u, 4064u, 1u},
    {0x1E22u, 4065u, 1u},
    {0x1E24u, 4066u, 1u},
    {0x1E26u, 4067u, 1u},
    {0x1E28u, 4068u, 1u},
    {0x1E2Au, 4069u, 1u},
    {0x1E2Cu, 4070u, 1u},
    {0x1E2Eu, 4071u, 1u},
    {0x1E30u, 4072u, 1u},
    {0x1E32u, 4073u, 1u},
    {0x1E34u, 4074u, 1u},
    {0x1E36u, 4075u, 1u},
    {0x1E38u, 4076u, 1u},
    {0x1E3Au, 4077u, 1u},
    {0x1E3Cu, 4078u, 1u},
    {0x1E3Eu, 4079u, 1u},
    {0x1E40u, 4080u, 1u},
    {0x1E42u, 4081u, 1u},
    {0x1E44u, 4082u, 1u},
    {0x1E46u, 4083u, 1u},
    {0x1E48u, 4084u, 1u},
    {0x1E4Au, 4085u, 1u},
    {0x1E4Cu, 4086u, 1u},
    {0x1E4Eu, 4087u, 1u},
    {0x1E50u, 4088u, 1u},
    {0x1E52u, 4089u, 1u},
    {0x1E54u, 4090u, 1u},
    {0x1E56u, 4091u, 1u},
    {0x1E58u, 4092u, 1u},
    {0x1E5Au, 4093u, 1u},
    {0x1E5Cu, 4094u, 1u},
    {0x1E5Eu, 4095u, 1u},
    {0x1E60u, 4096u, 1u},
    {0x1E62u, 4097u, 1u},
    {0x1E64u, 4098u, 1u},
    {0x1E66u, 4099u, 1u},
    {0x1E68u, 4100u, 1u},
    {0x1E6Au, 4101u, 1u},
    {0x1E6Cu, 4102u, 1u},
    {0x1E6Eu, 4103u, 1u},
    {0x1E70u, 4104u, 1u},
    {0x1E72u, 4105u, 1u},
    {0x1E74u, 4106u, 1u},
    {0x1E76u, 4107u, 1u},
    {0x1E78u, 4108u, 1u},
    {0x1E7Au, 4109u, 1u},
    {0x1E7Cu, 4110u, 1u},
    {0x1E7Eu, 4111u, 1u},
    {0x1E80u, 4112u, 1u},
    {0x1E82u, 4113u, 1u},
    {0x1E84u, 4114u, 1u},
    {0x1E86u, 4115u, 1u},
    {0x1E88u, 4116u, 1u},
    {0x1E8Au, 4117u, 1u},
    {0x1E8Cu, 4118u, 1u},
    {0x1E8Eu, 4119u, 1u},
    {0x1E90u, 4120u, 1u},
    {0x1E92u, 4121u, 1u},
    {0x1E94u, 4122u, 1u},
    {0x1E9Eu, 4123u, 1u},
    {0x1EA0u, 4124u, 1u},
    {0x1EA2u, 4125u, 1u},
    {0x1EA4u, 4126u, 1u},
    {0x1EA6u, 4127u, 1u},
    {0x1EA8u, 4128u, 1u},
    {0x1EAAu, 4129u, 1u},
    {0x1EACu, 4130u, 1u},
    {0x1EAEu, 4131u, 1u},
    {0x1EB0u, 4132u, 1u},
    {0x1EB2u, 4133u, 1u},
    {0x1EB4u, 4134u, 1u},
    {0x1EB6u, 4135u, 1u},
    {0x1EB8u, 4136u, 1u},
    {0x1EBAu, 4137u, 1u},
    {0x1EBCu, 4138u, 1u},
    {0x1EBEu, 4139u, 1u},
    {0x1EC0u, 4140u, 1u},
    {0x1EC2u, 4141u, 1u},
    {0x1EC4u, 4142u, 1u},
    {0x1EC6u, 4143u, 1u},
    {0x1EC8u, 4144u, 1u},
    {0x1ECAu, 4145u, 1u},
    {0x1ECCu, 4146u, 1u},
    {0x1ECEu, 4147u, 1u},
    {0x1ED0u, 4148u, 1u},
    {0x1ED2u, 4149u, 1u},
    {0x1ED4u, 4150u, 1u},
    {0x1ED6u, 4151u, 1u},
    {0x1ED8u, 4152u, 1u},
    {0x1EDAu, 4153u, 1u},
    {0x1EDCu, 4154u, 1u},
    {0x1EDEu, 4155u, 1u},
    {0x1EE0u, 4156u, 1u},
    {0x1EE2u, 4157u, 1u},
    {0x1EE4u, 4158u, 1u},
    {0x1EE6u, 4159u, 1u},
    {0x1EE8u, 4160u, 1u},
    {0x1EEAu, 4161u, 1u},
    {0x1EECu, 4162u, 1u},
    {0x1EEEu, 4163u, 1u},
    {0x1EF0u, 4164u, 1u},
    {0x1EF2u, 4165u, 1u},
    {0x1EF4u, 4166u, 1u},
    {0x1EF6u, 4167u, 1u},
    {0x1EF8u, 4168u, 1u},
    {0x1EFAu, 4169u, 1u},
    {0x1EFCu, 4170u, 1u},
    {0x1EFEu, 4171u, 1u},
    {0x1F08u, 4172u, 1u},
    {0x1F09u, 4173u, 1u},
    {0x1F0Au, 4174u, 1u},
    {0x1F0Bu, 4175u, 1u},
    {0x1F0Cu, 4176u, 1u},
    {0x1F0Du, 4177u, 1u},
    {0x1F0Eu, 4178u, 1u},
    {0x1F0Fu, 4179u, 1u},
    {0x1F18u, 4180u, 1u},
    {0x1F19u, 4181u, 1u},
    {0x1F1Au, 4182u, 1u},
    {0x1F1Bu, 4183u, 1u},
    {0x1F1Cu, 4184u, 1u},
    {0x1F1Du, 4185u, 1u},
    {0x1F28u, 4186u, 1u},
    {0x1F29u, 4187u, 1u},
    {0x1F2Au, 4188u, 1u},
    {0x1F2Bu, 4189u, 1u},
    {0x1F2Cu, 4190u, 1u},
    {0x1F2Du, 4191u, 1u},
    {0x1F2Eu, 4192u, 1u},
    {0x1F2Fu, 4193u, 1u},
    {0x1F38u, 4194u, 1u},
    {0x1F39u, 4195u, 1u},
    {0x1F3Au, 4196u, 1u},
    {0x1F3Bu, 4197u, 1u},
    {0x1F3Cu, 4198u, 1u},
    {0x1F3Du, 4199u, 1u},
    {0x1F3Eu, 4200u, 1u},
    {0x1F3Fu, 4201u, 1u},
    {0x1F48u, 4202u, 1u},
    {0x1F49u, 4203u, 1u},
    {0x1F4Au, 4204u, 1u},
    {0x1F4Bu, 4205u, 1u},
    {0x1F4Cu, 4206u, 1u},
    {0x1F4Du, 4207u, 1u},
    {0x1F59u, 4208u, 1u},
    {0x1F5Bu, 4209u, 1u},
    {0x1F5Du, 4210u, 1u},
    {0x1F5Fu, 4211u, 1u},
    {0x1F68u, 4212u, 1u},
    {0x1F69u, 4213u, 1u},
    {0x1F6Au, 4214u, 1u},
    {0x1F6Bu, 4215u, 1u},
    {0x1F6Cu, 4216u, 1u},
    {0x1F6Du, 4217u, 1u},
    {0x1F6Eu, 4218u, 1u},
    {0x1F6Fu, 4219u, 1u},
    {0x1F88u, 4220u, 1u},
    {0x1F89u, 4221u, 1u},
    {0x1F8Au, 4222u, 1u},
    {0x1F8Bu, 4223u, 1u},
    {0x1F8Cu, 4224u, 1u},
    {0x1F8Du, 4225u, 1u},
    {0x1F8Eu, 4226u, 1u},
    {0x1F8Fu, 4227u, 1u},
    {0x1F98u, 4228u, 1u},
    {0x1F99u, 4229u, 1u},
    {0x1F9Au, 4230u, 1u},
    {0x1F9Bu, 4231u, 1u},
    {0x1F9Cu, 4232u, 1u},
    {0x1F9Du, 4233u, 1u},
    {0x1F9Eu, 4234u, 1u},
    {0x1F9Fu, 4235u, 1u},
    {0x1FA8u, 4236u, 1u},
    {0x1FA9u, 4237u, 1u},
    {0x1FAAu, 4238u, 1u},
    {0x1FABu, 4239u, 1u},
    {0x1FACu, 4240u, 1u},
    {0x1FADu, 4241u, 1u},
    {0x1FAEu, 4242u, 1u},
    {0x1FAFu, 4243u, 1u},
    {0x1FB8u, 4244u, 1u},
    {0x1FB9u, 4245u, 1u},
    {0x1FBAu, 4246u, 1u},
    {0x1FBBu, 4247u, 1u},
    {0x1FBCu, 4248u, 1u},
    {0x1FC8u, 4249u, 1u},
    {0x1FC9u, 4250u, 1u},
    {0x1FCAu, 4251u, 1u},
    {0x1FCBu, 4252u, 1u},
    {0x1FCCu, 4253u, 1u},
    {0x1FD8u, 4254u, 1u},
    {0x1FD9u, 4255u, 1u},
    {0x1FDAu, 4256u, 1u},
    {0x1FDBu, 4257u, 1u},
    {0x1FE8u, 4258u, 1u},
    {0x1FE9u, 4259u, 1u},
    {0x1FEAu, 4260u, 1u},
    {0x1FEBu, 4261u, 1u},
    {0x1FECu, 4262u, 1u},
    {0x1FF8u, 4263u, 1u},
    {0x1FF9u, 4264u, 1u},
    {0x1FFAu, 4265u, 1u},
    {0x1FFBu, 4266u, 1u},
    {0x1FFCu, 4267u, 1u},
    {0x2126u, 4268u, 1u},
    {0x212Au, 4269u, 1u},
    {0x212Bu, 4270u, 1u},
    {0x2132u, 4271u, 1u},
    {0x2160u, 4272u, 1u},
    {0x2161u, 4273u, 1u},
    {0x2162u, 4274u, 1u},
    {0x2163u, 4275u, 1u},
    {0x2164u, 4276u, 1u},
    {0x2165u, 4277u, 1u},
    {0x2166u, 4278u, 1u},
    {0x2167u, 4279u, 1u},
    {0x2168u, 4280u, 1u},
    {0x2169u, 4281u, 1u},
    {0x216Au, 4282u, 1u},
    {0x216Bu, 4283u, 1u},
    {0x216Cu, 4284u, 1u},
    {0x216Du, 4285u, 1u},
    {0x216Eu, 4286u, 1u},
    {0x216Fu, 4287u, 1u},
    {0x2183u, 4288u, 1u},
    {0x24B6u, 4289u, 1u},
    {0x24B7u, 4290u, 1u},
    {0x24B8u, 4291u, 1u},
    {0x24B9u, 4292u, 1u},
    {0x24BAu, 4293u, 1u},
    {0x24BBu, 4294u, 1u},
    {0x24BCu, 4295u, 1u},
    {0x24BDu, 4296u, 1u},
    {0x24BEu, 4297u, 1u},
    {0x24BFu, 4298u, 1u},
    {0x24C0u, 4299u, 1u},
    {0x24C1u, 4300u, 1u},
    {0x24C2u, 4301u, 1u},
    {0x24C3u, 4302u, 1u},
    {0x24C4u, 4303u, 1u},
    {0x24C5u, 4304u, 1u},
    {0x24C6u, 4305u, 1u},
    {0x24C7u, 4306u, 1u},
    {0x24C8u, 4307u, 1u},
    {0x24C9u, 4308u, 1u},
    {0x24CAu, 4309u, 1u},
    {0x24CBu, 4310u, 1u},
    {0x24CCu, 4311u, 1u},
    {0x24CDu, 4312u, 1u},
    {0x24CEu, 4313u, 1u},
    {0x24CFu, 4314u, 1u},
    {0x2C00u, 4315u, 1u},
    {0x2C01u, 4316u, 1u},
    {0x2C02u, 4317u, 1u},
    {0x2C03u, 4318u, 1u},
    {0x2C04u, 4319u, 1u},
    {0x2C05u, 4320u, 1u},
    {0x2C06u, 4321u, 1u},
    {0x2C07u, 4322u, 1u},
    {0x2C08u, 4323u, 1u},
    {0x2C09u, 4324u, 1u},
    {0x2C0Au, 4325u, 1u},
    {0x2C0Bu, 4326u, 1u},
    {0x2C0Cu, 4327u, 1u},
    {0x2C0Du, 4328u, 1u},
    {0x2C0Eu, 4329u, 1u},
    {0x2C0Fu, 4330u, 1u},
    {0x2C10u, 4331u, 1u},
    {0x2C11u, 4332u, 1u},
    {0x2C12u, 4333u, 1u},
    {0x2C13u, 4334u, 1u},
    {0x2C14u, 4335u, 1u},
    {0x2C15u, 4336u, 1u},
    {0x2C16u, 4337u, 1u},
    {0x2C17u, 4338u, 1u},
    {0x2C18u, 4339u, 1u},
    {0x2C19u, 4340u, 1u},
    {0x2C1Au, 4341u, 1u},
    {0x2C1Bu, 4342u, 1u},
    {0x2C1Cu, 4343u, 1u},
    {0x2C1Du, 4344u, 1u},
    {0x2C1Eu, 4345u, 1u},
    {0x2C1Fu, 4346u, 1u},
    {0x2C20u, 4347u, 1u},
    {0x2C21u, 4348u, 1u},
    {0x2C22u, 4349u, 1u},
    {0x2C23u, 4350u, 1u},
    {0x2C24u, 4351u, 1u},
    {0x2C25u, 4352u, 1u},
    {0x2C26u, 4353u, 1u},
    {0x2C27u, 4354u, 1u},
    {0x2C28u, 4355u, 1u},
    {0x2C29u, 4356u, 1u},
    {0x2C2Au, 4357u, 1u},
    {0x2C2Bu, 4358u, 1u},
    {0x2C2Cu, 4359u, 1u},
    {0x2C2Du, 4360u, 1u},
    {0x2C2Eu, 4361u, 1u},
    {0x2C60u, 4362u, 1u},
    {0x2C62u, 4363u, 1u},
    {0x2C63u, 4364u, 1u},
    {0x2C64u, 4365u, 1u},
    {0x2C67u, 4366u, 1u},
    {0x2C69u, 4367u, 1u},
    {0x2C6Bu, 4368u, 1u},
    {0x2C6Du, 4369u, 1u},
    {0x2C6Eu, 4370u, 1u},
    {0x2C6Fu, 4371u, 1u},
    {0x2C70u, 4372u, 1u},
    {0x2C72u, 4373u, 1u},
    {0x2C75u, 4374u, 1u},
    {0x2C7Eu, 4375u, 1u},
    {0x2C7Fu, 4376u, 1u},
    {0x2C80u, 4377u, 1u},
    {0x2C82u, 4378u, 1u},
    {0x2C84u, 4379u, 1u},
    {0x2C86u, 4380u, 1u},
    {0x2C88u, 4381u, 1u},
    {0x2C8Au, 4382u, 1u},
    {0x2C8Cu, 4383u, 1u},
    {0x2C8Eu, 4384u, 1u},
    {0x2C90u, 4385u, 1u},
    {0x2C92u, 4386u, 1u},
    {0x2C94u, 4387u, 1u},
    {0x2C96u, 4388u, 1u},
    {0x2C98u, 4389u, 1u},
    {0x2C9Au, 4390u, 1u},
    {0x2C9Cu, 4391u, 1u},
    {0x2C9Eu, 4392u, 1u},
    {0x2CA0u, 4393u, 1u},
    {0x2CA2u, 4394u, 1u},
    {0x2CA4u, 4395u, 1u},
    {0x2CA6u, 4396u, 1u},
    {0x2CA8u, 4397u, 1u},
    {0x2CAAu, 4398u, 1u},
    {0x2CACu, 4399u, 1u},
    {0x2CAEu, 4400u, 1u},
    {0x2CB0u, 4401u, 1u},
    {0x2CB2u, 4402u, 1u},
    {0x2CB4u, 4403u, 1u},
    {0x2CB6u, 4404u, 1u},
    {0x2CB8u, 4405u, 1u},
    {0x2CBAu, 4406u, 1u},
    {0x2CBCu, 4407u, 1u},
    {0x2CBEu, 4408u, 1u},
    {0x2CC0u, 4409u, 1u},
    {0x2CC2u, 4410u, 1u},
    {0x2CC4u, 4411u, 1u},
    {0x2CC6u, 4412u, 1u},
    {0x2CC8u, 4413u, 1u},
    {0x2CCAu, 4414u, 1u},
    {0x2CCCu, 4415u, 1u},
    {0x2CCEu, 4416u, 1u},
    {0x2CD0u, 4417u, 1u},
    {0x2CD2u, 4418u, 1u},
    {0x2CD4u, 4419u, 1u},
    {0x2CD6u, 4420u, 1u},
    {0x2CD8u, 4421u, 1u},
    {0x2CDAu, 4422u, 1u},
    {0x2CDCu, 4423u, 1u},
    {0x2CDEu, 4424u, 1u},
    {0x2CE0u, 4425u, 1u},
    {0x2CE2u, 4426u, 1u},
    {0x2CEBu, 4427u, 1u},
    {0x2CEDu, 4428u, 1u},
    {0x2CF2u, 4429u, 1u},
    {0xA640u, 4430u, 1u},
    {0xA642u, 4431u, 1u},
    {0xA644u, 4432u, 1u},
    {0xA646u, 4433u, 1u},
    {0xA648u, 4434u, 1u},
    {0xA64Au, 4435u, 1u},
    {0xA64Cu, 4436u, 1u},
    {0xA64Eu, 4437u, 1u},
    {0xA650u, 4438u, 1u},
    {0xA652u, 4439u, 1u},
    {0xA654u, 4440u, 1u},
    {0xA656u, 4441u, 1u},
    {0xA658u, 4442u, 1u},
    {0xA65Au, 4443u, 1u},
    {0xA65Cu, 4444u, 1u},
    {0xA65Eu, 4445u, 1u},
    {0xA660u, 4446u, 1u},
    {0xA662u, 4447u, 1u},
    {0xA664u, 4448u, 1u},
    {0xA666u, 4449u, 1u},
    {0xA668u, 4450u, 1u},
    {0xA66Au, 4451u, 1u},
    {0xA66Cu, 4452u, 1u},
    {0xA680u, 4453u, 1u},
    {0xA682u, 4454u, 1u},
    {0xA684u, 4455u, 1u},
    {0xA686u, 4456u, 1u},
    {0xA688u, 4457u, 1u},
    {0xA68Au, 4458u, 1u},
    {0xA68Cu, 4459u, 1u},
    {0xA68Eu, 4460u, 1u},
    {0xA690u, 4461u, 1u},
    {0xA692u, 4462u, 1u},
    {0xA694u, 4463u, 1u},
    {0xA696u, 4464u, 1u},
    {0xA698u, 4465u, 1u},
    {0xA69Au, 4466u, 1u},
    {0xA722u, 4467u, 1u},
    {0xA724u, 4468u, 1u},
    {0xA726u, 4469u, 1u},
    {0xA728u, 4470u, 1u},
    {0xA72Au, 4471u, 1u},
    {0xA72Cu, 4472u, 1u},
    {0xA72Eu, 4473u, 1u},
    {0xA732u, 4474u, 1u},
    {0xA734u, 4475u, 1u},
    {0xA736u, 4476u, 1u},
    {0xA738u, 4477u, 1u},
    {0xA73Au, 4478u, 1u},
    {0xA73Cu, 4479u, 1u},
    {0xA73Eu, 4480u, 1u},
    {0xA740u, 4481u, 1u},
    {0xA742u, 4482u, 1u},
    {0xA744u, 4483u, 1u},
    {0xA746u, 4484u, 1u},
    {0xA748u, 4485u, 1u},
    {0xA74Au, 4486u, 1u},
    {0xA74Cu, 4487u, 1u},
    {0xA74Eu, 4488u, 1u},
    {0xA750u, 4489u, 1u},
    {0xA752u, 4490u, 1u},
    {0xA754u, 4491u, 1u},
    {0xA756u, 4492u, 1u},
    {0xA758u, 4493u, 1u},
    {0xA75Au, 4494u, 1u},
    {0xA75Cu, 4495u, 1u},
    {0xA75Eu, 4496u, 1u},
    {0xA760u, 4497u, 1u},
    {0xA762u, 4498u, 1u},
    {0xA764u, 4499u, 1u},
    {0xA766u, 4500u, 1u},
    {0xA768u, 4501u, 1u},
    {0xA76Au, 4502u, 1u},
    {0xA76Cu, 4503u, 1u},
    {0xA76Eu, 4504u, 1u},
    {0xA779u, 4505u, 1u},
    {0xA77Bu, 4506u, 1u},
    {0xA77Du, 4507u, 1u},
    {0xA77Eu, 4508u, 1u},
    {0xA780u, 4509u, 1u},
    {0xA782u, 4510u, 1u},
    {0xA784u, 4511u, 1u},
    {0xA786u, 4512u, 1u},
    {0xA78Bu, 4513u, 1u},
    {0xA78Du, 4514u, 1u},
    {0xA790u, 4515u, 1u},
    {0xA792u, 4516u, 1u},
    {0xA796u, 4517u, 1u},
    {0xA798u, 4518u, 1u},
    {0xA79Au, 4519u, 1u},
    {0xA79Cu, 4520u, 1u},
    {0xA79Eu, 4521u, 1u},
    {0xA7A0u, 4522u, 1u},
    {0xA7A2u, 4523u, 1u},
    {0xA7A4u, 4524u, 1u},
    {0xA7A6u, 4525u, 1u},
    {0xA7A8u, 4526u, 1u},
    {0xA7AAu, 4527u, 1u},
    {0xA7ABu, 4528u, 1u},
    {0xA7ACu, 4529u, 1u},
    {0xA7ADu, 4530u, 1u},
    {0xA7AEu, 4531u, 1u},
    {0xA7B0u, 4532u, 1u},
    {0xA7B1u, 4533u, 1u},
    {0xA7B2u, 4534u, 1u},
    {0xA7B3u, 4535u, 1u},
    {0xA7B4u, 4536u, 1u},
    {0xA7B6u, 4537u, 1u},
    {0xA7B8u, 4538u, 1u},
    {0xA7BAu, 4539u, 1u},
    {0xA7BCu, 4540u, 1u},
    {0xA7BEu, 4541u, 1u},
    {0xA7C2u, 4542u, 1u},
    {0xA7C4u, 4543u, 1u},
    {0xA7C5u, 4544u, 1u},
    {0xA7C6u, 4545u, 1u},
    {0xA7C7u, 4546u, 1u},
    {0xA7C9u, 4547u, 1u},
    {0xA7F5u, 4548u, 1u},
    {0xFF21u, 4549u, 1u},
    {0xFF22u, 4550u, 1u},
    {0xFF23u, 4551u, 1u},
    {0xFF24u, 4552u, 1u},
    {0xFF25u, 4553u, 1u},
    {0xFF26u, 4554u, 1u},
    {0xFF27u, 4555u, 1u},
    {0xFF28u, 4556u, 1u},
    {0xFF29u, 4557u, 1u},
    {0xFF2Au, 4558u, 1u},
    {0xFF2Bu, 4559u, 1u},
    {0xFF2Cu, 4560u, 1u},
    {0xFF2Du, 4561u, 1u},
    {0xFF2Eu, 4562u, 1u},
    {0xFF2Fu, 4563u, 1u},
    {0xFF30u, 4564u, 1u},
    {0xFF31u, 4565u, 1u},
    {0xFF32u, 4566u, 1u},
    {0xFF33u, 4567u, 1u},
    {0xFF34u, 4568u, 1u},
    {0xFF35u, 4569u, 1u},
    {0xFF36u, 4570u, 1u},
    {0xFF37u, 4571u, 1u},
    {0xFF38u, 4572u, 1u},
    {0xFF39u, 4573u, 1u},
    {0xFF3Au, 4574u, 1u},
    {0x10400u, 4575u, 1u},
    {0x10401u, 4576u, 1u},
    {0x10402u, 4577u, 1u},
    {0x10403u, 4578u, 1u},
    {0x10404u, 4579u, 1u},
    {0x10405u, 4580u, 1u},
    {0x10406u, 4581u, 1u},
    {0x10407u, 4582u, 1u},
    {0x10408u, 4583u, 1u},
    {0x10409u, 4584u, 1u},
    {0x1040Au, 4585u, 1u},
    {0x1040Bu, 4586u, 1u},
    {0x1040Cu, 4587u, 1u},
    {0x1040Du, 4588u, 1u},
    {0x1040Eu, 4589u, 1u},
    {0x1040Fu, 4590u, 1u},
    {0x10410u, 4591u, 1u},
    {0x10411u, 4592u, 1u},
    {0x10412u, 4593u, 1u},
    {0x10413u, 4594u, 1u},
    {0x10414u, 4595u, 1u},
    {0x10415u, 4596u, 1u},
    {0x10416u, 4597u, 1u},
    {0x10417u, 4598u, 1u},
    {0x10418u, 4599u, 1u},
    {0x10419u, 4600u, 1u},
    {0x1041Au, 4601u, 1u},
    {0x1041Bu, 4602u, 1u},
    {0x1041Cu, 4603u, 1u},
    {0x1041Du, 4604u, 1u},
    {0x1041Eu, 4605u, 1u},
    {0x1041Fu, 4606u, 1u},
    {0x10420u, 4607u, 1u},
    {0x10421u, 4608u, 1u},
    {0x10422u, 4609u, 1u},
    {0x10423u, 4610u, 1u},
    {0x10424u, 4611u, 1u},
    {0x10425u, 4612u, 1u},
    {0x10426u, 4613u, 1u},
    {0x10427u, 4614u, 1u},
    {0x104B0u, 4615u, 1u},
    {0x104B1u, 4616u, 1u},
    {0x104B2u, 4617u, 1u},
    {0x104B3u, 4618u, 1u},
    {0x104B4u, 4619u, 1u},
    {0x104B5u, 4620u, 1u},
    {0x104B6u, 4621u, 1u},
    {0x104B7u, 4622u, 1u},
    {0x104B8u, 4623u, 1u},
    {0x104B9u, 4624u, 1u},
    {0x104BAu, 4625u, 1u},
    {0x104BBu, 4626u, 1u},
    {0x104BCu, 4627u, 1u},
    {0x104BDu, 4628u, 1u},
    {0x104BEu, 4629u, 1u},
    {0x104BFu, 4630u, 1u},
    {0x104C0u, 4631u, 1u},
    {0x104C1u, 4632u, 1u},
    {0x104C2u, 4633u, 1u},
    {0x104C3u, 4634u, 1u},
    {0x104C4u, 4635u, 1u},
    {0x104C5u, 4636u, 1u},
    {0x104C6u, 4637u, 1u},
    {0x104C7u, 4638u, 1u},
    {0x104C8u, 4639u, 1u},
    {0x104C9u, 4640u, 1u},
    {0x104CAu, 4641u, 1u},
    {0x104CBu, 4642u, 1u},
    {0x104CCu, 4643u, 1u},
    {0x104CDu, 4644u, 1u},
    {0x104CEu, 4645u, 1u},
    {0x104CFu, 4646u, 1u},
    {0x104D0u, 4647u, 1u},
    {0x104D1u, 4648u, 1u},
    {0x104D2u, 4649u, 1u},
    {0x104D3u, 4650u, 1u},
    {0x10C80u, 4651u, 1u},
    {0x10C81u, 4652u, 1u},
    {0x10C82u, 4653u, 1u},
    {0x10C83u, 4654u, 1u},
    {0x10C84u, 4655u, 1u},
    {0x10C85u, 4656u, 1u},
    {0x10C86u, 4657u, 1u},
    {0x10C87u, 4658u, 1u},
    {0x10C88u, 4659u, 1u},
    {0x10C89u, 4660u, 1u},
    {0x10C8Au, 4661u, 1u},
    {0x10C8Bu, 4662u, 1u},
    {0x10C8Cu, 4663u, 1u},
    {0x10C8Du, 4664u, 1u},
    {0x10C8Eu, 4665u, 1u},
    {0x10C8Fu, 4666u, 1u},
    {0x10C90u, 4667u, 1u},
    {0x10C91u, 4668u, 1u},
    {0x10C92u, 4669u, 1u},
    {0x10C93u, 4670u, 1u},
    {0x10C94u, 4671u, 1u},
    {0x10C95u, 4672u, 1u},
    {0x10C96u, 4673u, 1u},
    {0x10C97u, 4674u, 1u},
    {0x10C98u, 4675u, 1u},
    {0x10C99u, 4676u, 1u},
    {0x10C9Au, 4677u, 1u},
    {0x10C9Bu, 4678u, 1u},
    {0x10C9Cu, 4679u, 1u},
    {0x10C9Du, 4680u, 1u},
    {0x10C9Eu, 4681u, 1u},
    {0x10C9Fu, 4682u, 1u},
    {0x10CA0u, 4683u, 1u},
    {0x10CA1u, 4684u, 1u},
    {0x10CA2u, 4685u, 1u},
    {0x10CA3u, 4686u, 1u},
    {0x10CA4u, 4687u, 1u},
    {0x10CA5u, 4688u, 1u},
    {0x10CA6u, 4689u, 1u},
    {0x10CA7u, 4690u, 1u},
    {0x10CA8u, 4691u, 1u},
    {0x10CA9u, 4692u, 1u},
    {0x10CAAu, 4693u, 1u},
    {0x10CABu, 4694u, 1u},
    {0x10CACu, 4695u, 1u},
    {0x10CADu, 4696u, 1u},
    {0x10CAEu, 4697u, 1u},
    {0x10CAFu, 4698u, 1u},
    {0x10CB0u, 4699u, 1u},
    {0x10CB1u, 4700u, 1u},
    {0x10CB2u, 4701u, 1u},
    {0x118A0u, 4702u, 1u},
    {0x118A1u, 4703u, 1u},
    {0x118A2u, 4704u, 1u},
    {0x118A3u, 4705u, 1u},
    {0x118A4u, 4706u, 1u},
    {0x118A5u, 4707u, 1u},
    {0x118A6u, 4708u, 1u},
    {0x118A7u, 4709u, 1u},
    {0x118A8u, 4710u, 1u},
    {0x118A9u, 4711u, 1u},
    {0x118AAu, 4712u, 1u},
    {0x118ABu, 4713u, 1u},
    {0x118ACu, 4714u, 1u},
    {0x118ADu, 4715u, 1u},
    {0x118AEu, 4716u, 1u},
    {0x118AFu, 4717u, 1u},
    {0x118B0u, 4718u, 1u},
    {0x118B1u, 4719u, 1u},
    {0x118B2u, 4720u, 1u},
    {0x118B3u, 4721u, 1u},
    {0x118B4u, 4722u, 1u},
    {0x118B5u, 4723u, 1u},
    {0x118B6u, 4724u, 1u},
    {0x118B7u, 4725u, 1u},
    {0x118B8u, 4726u, 1u},
    {0x118B9u, 4727u, 1u},
    {0x118BAu, 4728u, 1u},
    {0x118BBu, 4729u, 1u},
    {0x118BCu, 4730u, 1u},
    {0x118BDu, 4731u, 1u},
    {0x118BEu, 4732u, 1u},
    {0x118BFu, 4733u, 1u},
    {0x16E40u, 4734u, 1u},
    {0x16E41u, 4735u, 1u},
    {0x16E42u, 4736u, 1u},
    {0x16E43u, 4737u, 1u},
    {0x16E44u, 4738u, 1u},
    {0x16E45u, 4739u, 1u},
    {0x16E46u, 4740u, 1u},
    {0x16E47u, 4741u, 1u},
    {0x16E48u, 4742u, 1u},
    {0x16E49u, 4743u, 1u},
    {0x16E4Au, 4744u, 1u},
    {0x16E4Bu, 4745u, 1u},
    {0x16E4Cu, 4746u, 1u},
    {0x16E4Du, 4747u, 1u},
    {0x16E4Eu, 4748u, 1u},
    {0x16E4Fu, 4749u, 1u},
    {0x16E50u, 4750u, 1u},
    {0x16E51u, 4751u, 1u},
    {0x16E52u, 4752u, 1u},
    {0x16E53u, 4753u, 1u},
    {0x16E54u, 4754u, 1u},
    {0x16E55u, 4755u, 1u},
    {0x16E56u, 4756u, 1u},
    {0x16E57u, 4757u, 1u},
    {0x16E58u, 4758u, 1u},
    {0x16E59u, 4759u, 1u},
    {0x16E5Au, 4760u, 1u},
    {0x16E5Bu, 4761u, 1u},
    {0x16E5Cu, 4762u, 1u},
    {0x16E5Du, 4763u, 1u},
    {0x16E5Eu, 4764u, 1u},
    {0x16E5Fu, 4765u, 1u},
    {0x1E900u, 4766u, 1u},
    {0x1E901u, 4767u, 1u},
    {0x1E902u, 4768u, 1u},
    {0x1E903u, 4769u, 1u},
    {0x1E904u, 4770u, 1u},
    {0x1E905u, 4771u, 1u},
    {0x1E906u, 4772u, 1u},
    {0x1E907u, 4773u, 1u},
    {0x1E908u, 4774u, 1u},
    {0x1E909u, 4775u, 1u},
    {0x1E90Au, 4776u, 1u},
    {0x1E90Bu, 4777u, 1u},
    {0x1E90Cu, 4778u, 1u},
    {0x1E90Du, 4779u, 1u},
    {0x1E90Eu, 4780u, 1u},
    {0x1E90Fu, 4781u, 1u},
    {0x1E910u, 4782u, 1u},
    {0x1E911u, 4783u, 1u},
    {0x1E912u, 4784u, 1u},
    {0x1E913u, 4785u, 1u},
    {0x1E914u, 4786u, 1u},
    {0x1E915u, 4787u, 1u},
    {0x1E916u, 4788u, 1u},
    {0x1E917u, 4789u, 1u},
    {0x1E918u, 4790u, 1u},
    {0x1E919u, 4791u, 1u},
    {0x1E91Au, 4792u, 1u},
    {0x1E91Bu, 4793u, 1u},
    {0x1E91Cu, 4794u, 1u},
    {0x1E91Du, 4795u, 1u},
    {0x1E91Eu, 4796u, 1u},
    {0x1E91Fu, 4797u, 1u},
    {0x1E920u, 4798u, 1u},
    {0x1E921u, 4799u, 1u},
};
const std::size_t kLowerCount = 1393;

const char32_t kExpansion[] = {
    0x41, 0x300, 0x41, 0x301, 0x41, 0x302, 0x41, 0x303, 0x41, 0x308, 0x41, 0x30A,
    0x43, 0x327, 0x45, 0x300, 0x45, 0x301, 0x45, 0x302, 0x45, 0x308, 0x49, 0x300,
    0x49, 0x301, 0x49, 0x302, 0x49, 0x308, 0x4E, 0x303, 0x4F, 0x300, 0x4F, 0x301,
    0x4F, 0x302, 0x4F, 0x303, 0x4F, 0x308, 0x55, 0x300, 0x55, 0x301, 0x55, 0x302,
    0x55, 0x308, 0x59, 0x301, 0x61, 0x300, 0x61, 0x301, 0x61, 0x302, 0x61, 0x303,
    0x61, 0x308, 0x61, 0x30A, 0x63, 0x327, 0x65, 0x300, 0x65, 0x301, 0x65, 0x302,
    0x65, 0x308, 0x69, 0x300, 0x69, 0x301, 0x69, 0x302, 0x69, 0x308, 0x6E, 0x303,
    0x6F, 0x300, 0x6F, 0x301, 0x6F, 0x302, 0x6F, 0x303, 0x6F, 0x308, 0x75, 0x300,
    0x75, 0x301, 0x75, 0x302, 0x75, 0x308, 0x79, 0x301, 0x79, 0x308, 0x41, 0x304,
    0x61, 0x304, 0x41, 0x306, 0x61, 0x306, 0x41, 0x328, 0x61, 0x328, 0x43, 0x301,
    0x63, 0x301, 0x43, 0x302, 0x63, 0x302, 0x43, 0x307, 0x63, 0x307, 0x43, 0x30C,
    0x63, 0x30C, 0x44, 0x30C, 0x64, 0x30C, 0x45, 0x304, 0x65, 0x304, 0x45, 0x306,
    0x65, 0x306, 0x45, 0x307, 0x65, 0x307, 0x45, 0x328, 0x65, 0x328, 0x45, 0x30C,
    0x65, 0x30C, 0x47, 0x302, 0x67, 0x302, 0x47, 0x306, 0x67, 0x306, 0x47, 0x307,
    0x67, 0x307, 0x47, 0x327, 0x67, 0x327, 0x48, 0x302, 0x68, 0x302, 0x49, 0x303,
    0x69, 0x303, 0x49, 0x304, 0x69, 0x304, 0x49, 0x306, 0x69, 0x306, 0x49, 0x328,
    0x69, 0x328, 0x49, 0x307, 0x4A, 0x302, 0x6A, 0x302, 0x4B, 0x327, 0x6B, 0x327,
    0x4C, 0x301, 0x6C, 0x301, 0x4C, 0x327, 0x6C, 0x327, 0x4C, 0x30C, 0x6C, 0x30C,
    0x4E, 0x301, 0x6E, 0x301, 0x4E, 0x327, 0x6E, 0x327, 0x4E, 0x30C, 0x6E, 0x30C,
    0x4F, 0x304, 0x6F, 0x304, 0x4F, 0x306, 0x6F, 0x306, 0x4F, 0x30B, 0x6F, 0x30B,
    0x52, 0x301, 0x72, 0x301, 0x52, 0x327, 0x72, 0x327, 0x52, 0x30C, 0x72, 0x30C,
    0x53, 0x301, 0x73, 0x301, 0x53, 0x302, 0x73, 0x302, 0x53, 0x327, 0x73, 0x327,
    0x53, 0x30C, 0x73, 0x30C, 0x54, 0x327, 0x74, 0x327, 0x54, 0x30C, 0x74, 0x30C,
    0x55, 0x303, 0x75, 0x303, 0x55, 0x304, 0x75, 0x304, 0x55, 0x306, 0x75, 0x306,
    0x55, 0x30A, 0x75, 0x30A, 0x55, 0x30B, 0x75, 0x30B, 0x55, 0x328, 0x75, 0x328,
    0x57, 0x302, 0x77, 0x302, 0x59, 0x302, 0x79, 0x302, 0x59, 0x308, 0x5A, 0x301,
    0x7A, 0x301, 0x5A, 0x307, 0x7A, 0x307, 0x5A, 0x30C, 0x7A, 0x30C, 0x4F, 0x31B,
    0x6F, 0x31B, 0x55, 0x31B, 0x75, 0x31B, 0x41, 0x30C, 0x61, 0x30C, 0x49, 0x30C,
    0x69, 0x30C, 0x4F, 0x30C, 0x6F, 0x30C, 0x55, 0x30C, 0x75, 0x30C, 0x55, 0x308,
    0x304, 0x75, 0x308, 0x304, 0x55, 0x308, 0x301, 0x75, 0x308, 0x301, 0x55, 0x308,
    0x30C, 0x75, 0x308, 0x30C, 0x55, 0x308, 0x300, 0x75, 0x308, 0x300, 0x41, 0x308,
    0x304, 0x61, 0x308, 0x304, 0x41, 0x307, 0x304, 0x61, 0x307, 0x304, 0xC6, 0x304,
    0xE6, 0x304, 0x47, 0x30C, 0x67, 0x30C, 0x4B, 0x30C, 0x6B, 0x30C, 0x4F, 0x328,
    0x6F, 0x328, 0x4F, 0x328, 0x304, 0x6F, 0x328, 0x304, 0x1B7, 0x30C, 0x292, 0x30C,
    0x6A, 0x30C, 0x47, 0x301, 0x67, 0x301, 0x4E, 0x300, 0x6E, 0x300, 0x41, 0x30A,
    0x301, 0x61, 0x30A, 0x301, 0xC6, 0x301, 0xE6, 0x301, 0xD8, 0x301, 0xF8, 0x301,
    0x41, 0x30F, 0x61, 0x30F, 0x41, 0x311, 0x61, 0x311, 0x45, 0x30F, 0x65, 0x30F,
    0x45, 0x311, 0x65, 0x311, 0x49, 0x30F, 0x69, 0x30F, 0x49, 0x311, 0x69, 0x311,
    0x4F, 0x30F, 0x6F, 0x30F, 0x4F, 0x311, 0x6F, 0x311, 0x52, 0x30F, 0x72, 0x30F,
    0x52, 0x311, 0x72, 0x311, 0x55, 0x30F, 0x75, 0x30F, 0x55, 0x311, 0x75, 0x311,
    0x53, 0x326, 0x73, 0x326, 0x54, 0x326, 0x74, 0x326, 0x48, 0x30C, 0x68, 0x30C,
    0x41, 0x307, 0x61, 0x307, 0x45, 0x327, 0x65, 0x327, 0x4F, 0x308, 0x304, 0x6F,
    0x308, 0x304, 0x4F, 0x303, 0x304, 0x6F, 0x303, 0x304, 0x4F, 0x307, 0x6F, 0x307,
    0x4F, 0x307, 0x304, 0x6F, 0x307, 0x304, 0x59, 0x304, 0x79, 0x304, 0x300, 0x301,
    0x313, 0x308, 0x301, 0x2B9, 0x3B, 0xA8, 0x301, 0x391, 0x301, 0xB7, 0x395, 0x301,
    0x397, 0x301, 0x399, 0x301, 0x39F, 0x301, 0x3A5, 0x301, 0x3A9, 0x301, 0x3B9, 0x308,
    0x301, 0x399, 0x308, 0x3A5, 0x308, 0x3B1, 0x301, 0x3B5, 0x301, 0x3B7, 0x301, 0x3B9,
    0x301, 0x3C5, 0x308, 0x301, 0x3B9, 0x308, 0x3C5, 0x308, 0x3BF, 0x301, 0x3C5, 0x301,
    0x3C9, 0x301, 0x3D2, 0x301, 0x3D2, 0x308, 0x415, 0x300, 0x415, 0x308, 0x413, 0x301,
    0x406, 0x308, 0x41A, 0x301, 0x418, 0x300, 0x423, 0x306, 0x418, 0x306, 0x438, 0x306,
    0x435, 0x300, 0x435, 0x308, 0x433, 0x301, 0x456, 0x308, 0x43A, 0x301, 0x438, 0x300,
    0x443, 0x306, 0x474, 0x30F, 0x475, 0x30F, 0x416, 0x306, 0x436, 0x306, 0x410, 0x306,
    0x430, 0x306, 0x410, 0x308, 0x430, 0x308, 0x415, 0x306, 0x435, 0x306, 0x4D8, 0x308,
    0x4D9, 0x308, 0x416, 0x308, 0x436, 0x308, 0x417, 0x308, 0x437, 0x308, 0x418, 0x304,
    0x438, 0x304, 0x418, 0x308, 0x438, 0x308, 0x41E, 0x308, 0x43E, 0x308, 0x4E8, 0x308,
    0x4E9, 0x308, 0x42D, 0x308, 0x44D, 0x308, 0x423, 0x304, 0x443, 0x304, 0x423, 0x308,
    0x443, 0x308, 0x423, 0x30B, 0x443, 0x30B, 0x427, 0x308, 0x447, 0x308, 0x42B, 0x308,
    0x44B, 0x308, 0x627, 0x653, 0x627, 0x654, 0x648, 0x654, 0x627, 0x655, 0x64A, 0x654,
    0x6D5, 0x654, 0x6C1, 0x654, 0x6D2, 0x654, 0x928, 0x93C, 0x930, 0x93C, 0x933, 0x93C,
    0x915, 0x93C, 0x916, 0x93C, 0x917, 0x93C, 0x91C, 0x93C, 0x921, 0x93C, 0x922, 0x93C,
    0x92B, 0x93C, 0x92F, 0x93C, 0x9C7, 0x9BE, 0x9C7, 0x9D7, 0x9A1, 0x9BC, 0x9A2, 0x9BC,
    0x9AF, 0x9BC, 0xA32, 0xA3C, 0xA38, 0xA3C, 0xA16, 0xA3C, 0xA17, 0xA3C, 0xA1C, 0xA3C,
    0xA2B, 0xA3C, 0xB47, 0xB56, 0xB47, 0xB3E, 0xB47, 0xB57, 0xB21, 0xB3C, 0xB22, 0xB3C,
    0xB92, 0xBD7, 0xBC6, 0xBBE, 0xBC7, 0xBBE, 0xBC6, 0xBD7, 0xC46, 0xC56, 0xCBF, 0xCD5,
    0xCC6, 0xCD5, 0xCC6, 0xCD6, 0xCC6, 0xCC2, 0xCC6, 0xCC2, 0xCD5, 0xD46, 0xD3E, 0xD47,
    0xD3E, 0xD46, 0xD57, 0xDD9, 0xDCA, 0xDD9, 0xDCF, 0xDD9, 0xDCF, 0xDCA, 0xDD9, 0xDDF,
    0xF42, 0xFB7, 0xF4C, 0xFB7, 0xF51, 0xFB7, 0xF56, 0xFB7, 0xF5B, 0xFB7, 0xF40, 0xFB5,
    0xF71, 0xF72, 0xF71, 0xF74, 0xFB2, 0xF80, 0xFB3, 0xF80, 0xF71, 0xF80, 0xF92, 0xFB7,
    0xF9C, 0xFB7, 0xFA1, 0xFB7, 0xFA6, 0xFB7, 0xFAB, 0xFB7, 0xF90, 0xFB5, 0x1025, 0x102E,
    0x1B05, 0x1B35, 0x1B07, 0x1B35, 0x1B09, 0x1B35, 0x1B0B, 0x1B35, 0x1B0D, 0x1B35, 0x1B11, 0x1B35,
    0x1B3A, 0x1B35, 0x1B3C, 0x1B35, 0x1B3E, 0x1B35, 0x1B3F, 0x1B35, 0x1B42, 0x1B35, 0x41, 0x325,
    0x61, 0x325, 0x42, 0x307, 0x62, 0x307, 0x42, 0x323, 0x62, 0x323, 0x42, 0x331,
    0x62, 0x331, 0x43, 0x327, 0x301, 0x63, 0x327, 0x301, 0x44, 0x307, 0x64, 0x307,
    0x44, 0x323, 0x64, 0x323, 0x44, 0x331, 0x64, 0x331, 0x44, 0x327, 0x64, 0x327,
    0x44, 0x32D, 0x64, 0x32D, 0x45, 0x304, 0x300, 0x65, 0x304, 0x300, 0x45, 0x304,
    0x301, 0x65, 0x304, 0x301, 0x45, 0x32D, 0x65, 0x32D, 0x45, 0x330, 0x65, 0x330,
    0x45, 0x327, 0x306, 0x65, 0x327, 0x306, 0x46, 0x307, 0x66, 0x307, 0x47, 0x304,
    0x67, 0x304, 0x48, 0x307, 0x68, 0x307, 0x48, 0x323, 0x68, 0x323, 0x48, 0x308,
    0x68, 0x308, 0x48, 0x327, 0x68, 0x327, 0x48, 0x32E, 0x68, 0x32E, 0x49, 0x330,
    0x69, 0x330, 0x49, 0x308, 0x301, 0x69, 0x308, 0x301, 0x4B, 0x301, 0x6B, 0x301,
    0x4B, 0x323, 0x6B, 0x323, 0x4B, 0x331, 0x6B, 0x331, 0x4C, 0x323, 0x6C, 0x323,
    0x4C, 0x323, 0x304, 0x6C, 0x323, 0x304, 0x4C, 0x331, 0x6C, 0x331, 0x4C, 0x32D,
    0x6C, 0x32D, 0x4D, 0x301, 0x6D, 0x301, 0x4D, 0x307, 0x6D, 0x307, 0x4D, 0x323,
    0x6D, 0x323, 0x4E, 0x307, 0x6E, 0x307, 0x4E, 0x323, 0x6E, 0x323, 0x4E, 0x331,
    0x6E, 0x331, 0x4E, 0x32D, 0x6E, 0x32D, 0x4F, 0x303, 0x301, 0x6F, 0x303, 0x301,
    0x4F, 0x303, 0x308, 0x6F, 0x303, 0x308, 0x4F, 0x304, 0x300, 0x6F, 0x304, 0x300,
    0x4F, 0x304, 0x301, 0x6F, 0x304, 0x301, 0x50, 0x301, 0x70, 0x301, 0x50, 0x307,
    0x70, 0x307, 0x52, 0x307, 0x72, 0x307, 0x52, 0x323, 0x72, 0x323, 0x52, 0x323,
    0x304, 0x72, 0x323, 0x304, 0x52, 0x331, 0x72, 0x331, 0x53, 0x307, 0x73, 0x307,
    0x53, 0x323, 0x73, 0x323, 0x53, 0x301, 0x307, 0x73, 0x301, 0x307, 0x53, 0x30C,
    0x307, 0x73, 0x30C, 0x307, 0x53, 0x323, 0x307, 0x73, 0x323, 0x307, 0x54, 0x307,
    0x74, 0x307, 0x54, 0x323, 0x74, 0x323, 0x54, 0x331, 0x74, 0x331, 0x54, 0x32D,
    0x74, 0x32D, 0x55, 0x324, 0x75, 0x324, 0x55, 0x330, 0x75, 0x330, 0x55, 0x32D,
    0x75, 0x32D, 0x55, 0x303, 0x301, 0x75, 0x303, 0x301, 0x55, 0x304, 0x308, 0x75,
    0x304, 0x308, 0x56, 0x303, 0x76, 0x303, 0x56, 0x323, 0x76, 0x323, 0x57, 0x300,
    0x77, 0x300, 0x57, 0x301, 0x77, 0x301, 0x57, 0x308, 0x77, 0x308, 0x57, 0x307,
    0x77, 0x307, 0x57, 0x323, 0x77, 0x323, 0x58, 0x307, 0x78, 0x307, 0x58, 0x308,
    0x78, 0x308, 0x59, 0x307, 0x79, 0x307, 0x5A, 0x302, 0x7A, 0x302, 0x5A, 0x323,
    0x7A, 0x323, 0x5A, 0x331, 0x7A, 0x331, 0x68, 0x331, 0x74, 0x308, 0x77, 0x30A,
    0x79, 0x30A, 0x17F, 0x307, 0x41, 0x323, 0x61, 0x323, 0x41, 0x309, 0x61, 0x309,
    0x41, 0x302, 0x301, 0x61, 0x302, 0x301, 0x41, 0x302, 0x300, 0x61, 0x302, 0x300,
    0x41, 0x302, 0x309, 0x61, 0x302, 0x309, 0x41, 0x302, 0x303, 0x61, 0x302, 0x303,
    0x41, 0x323, 0x302, 0x61, 0x323, 0x302, 0x41, 0x306, 0x301, 0x61, 0x306, 0x301,
    0x41, 0x306, 0x300, 0x61, 0x306, 0x300, 0x41, 0x306, 0x309, 0x61, 0x306, 0x309,
    0x41, 0x306, 0x303, 0x61, 0x306, 0x303, 0x41, 0x323, 0x306, 0x61, 0x323, 0x306,
    0x45, 0x323, 0x65, 0x323, 0x45, 0x309, 0x65, 0x309, 0x45, 0x303, 0x65, 0x303,
    0x45, 0x302, 0x301, 0x65, 0x302, 0x301, 0x45, 0x302, 0x300, 0x65, 0x302, 0x300,
    0x45, 0x302, 0x309, 0x65, 0x302, 0x309, 0x45, 0x302, 0x303, 0x65, 0x302, 0x303,
    0x45, 0x323, 0x302, 0x65, 0x323, 0x302, 0x49, 0x309, 0x69, 0x309, 0x49, 0x323,
    0x69, 0x323, 0x4F, 0x323, 0x6F, 0x323, 0x4F, 0x309, 0x6F, 0x309, 0x4F, 0x302,
    0x301, 0x6F, 0x302, 0x301, 0x4F, 0x302, 0x300, 0x6F, 0x302, 0x300, 0x4F, 0x302,
    0x309, 0x6F, 0x302, 0x309, 0x4F, 0x302, 0x303, 0x6F, 0x302, 0x303, 0x4F, 0x323,
    0x302, 0x6F, 0x323, 0x302, 0x4F, 0x31B, 0x301, 0x6F, 0x31B, 0x301, 0x4F, 0x31B,
    0x300, 0x6F, 0x31B, 0x300, 0x4F, 0x31B, 0x309, 0x6F, 0x31B, 0x309, 0x4F, 0x31B,
    0x303, 0x6F, 0x31B, 0x303, 0x4F, 0x31B, 0x323, 0x6F, 0x31B, 0x323, 0x55, 0x323,
    0x75, 0x323, 0x55, 0x309, 0x75, 0x309, 0x55, 0x31B, 0x301, 0x75, 0x31B, 0x301,
    0x55, 0x31B, 0x300, 0x75, 0x31B, 0x300, 0x55, 0x31B, 0x309, 0x75, 0x31B, 0x309,
    0x55, 0x31B, 0x303, 0x75, 0x31B, 0x303, 0x55, 0x31B, 0x323, 0x75, 0x31B, 0x323,
    0x59, 0x300, 0x79, 0x300, 0x59, 0x323, 0x79, 0x323, 0x59, 0x309, 0x79, 0x309,
    0x59, 0x303, 0x79, 0x303, 0x3B1, 0x313, 0x3B1, 0x314, 0x3B1, 0x313, 0x300, 0x3B1,
    0x314, 0x300, 0x3B1, 0x313, 0x301, 0x3B1, 0x314, 0x301, 0x3B1, 0x313, 0x342, 0x3B1,
    0x314, 0x342, 0x391, 0x313, 0x391, 0x314, 0x391, 0x313, 0x300, 0x391, 0x314, 0x300,
    0x391, 0x313, 0x301, 0x391, 0x314, 0x301, 0x391, 0x313, 0x342, 0x391, 0x314, 0x342,
    0x3B5, 0x313, 0x3B5, 0x314, 0x3B5, 0x313, 0x300, 0x3B5, 0x314, 0x300, 0x3B5, 0x313,
    0x301, 0x3B5, 0x314, 0x301, 0x395, 0x313, 0x395, 0x314, 0x395, 0x313, 0x300, 0x395,
    0x314, 0x300, 0x395, 0x313, 0x301, 0x395, 0x314, 0x301, 0x3B7, 0x313, 0x3B7, 0x314,
    0x3B7, 0x313, 0x300, 0x3B7, 0x314, 0x300, 0x3B7, 0x313, 0x301, 0x3B7, 0x314, 0x301,
    0x3B7, 0x313, 0x342, 0x3B7, 0x314, 0x342, 0x397, 0x313, 0x397, 0x314, 0x397, 0x313,
    0x300, 0x397, 0x314, 0x300, 0x397, 0x313, 0x301, 0x397, 0x314, 0x301, 0x397, 0x313,
    0x342, 0x397, 0x314, 0x342, 0x3B9, 0x313, 0x3B9, 0x314, 0x3B9, 0x313, 0x300, 0x3B9,
    0x314, 0x300, 0x3B9, 0x313, 0x301, 0x3B9, 0x314, 0x301, 0x3B9, 0x313, 0x342, 0x3B9,
    0x314, 0x342, 0x399, 0x313, 0x399, 0x314, 0x399, 0x313, 0x300, 0x399, 0x314, 0x300,
    0x399, 0x313, 0x301, 0x399, 0x314, 0x301, 0x399, 0x313, 0x342, 0x399, 0x314, 0x342,
    0x3BF, 0x313, 0x3BF, 0x314, 0x3BF, 0x313, 0x300, 0x3BF, 0x314, 0x300, 0x3BF, 0x313,
    0x301, 0x3BF, 0x314, 0x301, 0x39F, 0x313, 0x39F, 0x314, 0x39F, 0x313, 0x300, 0x39F,
    0x314, 0x300, 0x39F, 0x313, 0x301, 0x39F, 0x314, 0x301, 0x3C5, 0x313, 0x3C5, 0x314,
    0x3C5, 0x313, 0x300, 0x3C5, 0x314, 0x300, 0x3C5, 0x313, 0x301, 0x3C5, 0x314, 0x301,
    0x3C5, 0x313, 0x342, 0x3C5, 0x314, 0x342, 0x3A5, 0x314, 0x3A5, 0x314, 0x300, 0x3A5,
    0x314, 0x301, 0x3A5, 0x314, 0x342, 0x3C9, 0x313, 0x3C9, 0x314, 0x3C9, 0x313, 0x300,
    0x3C9, 0x314, 0x300, 0x3C9, 0x313, 0x301, 0x3C9, 0x314, 0x301, 0x3C9, 0x313, 0x342,
    0x3C9, 0x314, 0x342, 0x3A9, 0x313, 0x3A9, 0x314, 0x3A9, 0x313, 0x300, 0x3A9, 0x314,
    0x300, 0x3A9, 0x313, 0x301, 0x3A9, 0x314, 0x301, 0x3A9, 0x313, 0x342, 0x3A9, 0x314,
    0x342, 0x3B1, 0x300, 0x3B1, 0x301, 0x3B5, 0x300, 0x3B5, 0x301, 0x3B7, 0x300, 0x3B7,
    0x301, 0x3B9, 0x300, 0x3B9, 0x301, 0x3BF, 0x300, 0x3BF, 0x301, 0x3C5, 0x300, 0x3C5,
    0x301, 0x3C9, 0x300, 0x3C9, 0x301, 0x3B1, 0x313, 0x345, 0x3B1, 0x314, 0x345, 0x3B1,
    0x313, 0x300, 0x345, 0x3B1, 0x314, 0x300, 0x345, 0x3B1, 0x313, 0x301, 0x345, 0x3B1,
    0x314, 0x301, 0x345, 0x3B1, 0x313, 0x342, 0x345, 0x3B1, 0x314, 0x342, 0x345, 0x391,
    0x313, 0x345, 0x391, 0x314, 0x345, 0x391, 0x313, 0x300, 0x345, 0x391, 0x314, 0x300,
    0x345, 0x391, 0x313, 0x301, 0x345, 0x391, 0x314, 0x301, 0x345, 0x391, 0x313, 0x342,
    0x345, 0x391, 0x314, 0x342, 0x345, 0x3B7, 0x313, 0x345, 0x3B7, 0x314, 0x345, 0x3B7,
    0x313, 0x300, 0x345, 0x3B7, 0x314, 0x300, 0x345, 0x3B7, 0x313, 0x301, 0x345, 0x3B7,
    0x314, 0x301, 0x345, 0x3B7, 0x313, 0x342, 0x345, 0x3B7, 0x314, 0x342, 0x345, 0x397,
    0x313, 0x345, 0x397, 0x314, 0x345, 0x397, 0x313, 0x300, 0x345, 0x397, 0x314, 0x300,
    0x345, 0x397, 0x313, 0x301, 0x345, 0x397, 0x314, 0x301, 0x345, 0x397, 0x313, 0x342,
    0x345, 0x397, 0x314, 0x342, 0x345, 0x3C9, 0x313, 0x345, 0x3C9, 0x314, 0x345, 0x3C9,
    0x313, 0x300, 0x345, 0x3C9, 0x314, 0x300, 0x345, 0x3C9, 0x313, 0x301, 0x345, 0x3C9,
    0x314, 0x301, 0x345, 0x3C9, 0x313, 0x342, 0x345, 0x3C9, 0x314, 0x342, 0x345, 0x3A9,
    0x313, 0x345, 0x3A9, 0x314, 0x345, 0x3A9, 0x313, 0x300, 0x345, 0x3A9, 0x314, 0x300,
    0x345, 0x3A9, 0x313, 0x301, 0x345, 0x3A9, 0x314, 0x301, 0x345, 0x3A9, 0x313, 0x342,
    0x345, 0x3A9, 0x314, 0x342, 0x345, 0x3B1, 0x306, 0x3B1, 0x304, 0x3B1, 0x300, 0x345,
    0x3B1, 0x345, 0x3B1, 0x301, 0x345, 0x3B1, 0x342, 0x3B1, 0x342, 0x345, 0x391, 0x306,
    0x391, 0x304, 0x391, 0x300, 0x391, 0x301, 0x391, 0x345, 0x3B9, 0xA8, 0x342, 0x3B7,
    0x300, 0x345, 0x3B7, 0x345, 0x3B7, 0x301, 0x345, 0x3B7, 0x342, 0x3B7, 0x342, 0x345,
    0x395, 0x300, 0x395, 0x301, 0x397, 0x300, 0x397, 0x301, 0x397, 0x345, 0x1FBF, 0x300,
    0x1FBF, 0x301, 0x1FBF, 0x342, 0x3B9, 0x306, 0x3B9, 0x304, 0x3B9, 0x308, 0x300, 0x3B9,
    0x308, 0x301, 0x3B9, 0x342, 0x3B9, 0x308, 0x342, 0x399, 0x306, 0x399, 0x304, 0x399,
    0x300, 0x399, 0x301, 0x1FFE, 0x300, 0x1FFE, 0x301, 0x1FFE, 0x342, 0x3C5, 0x306, 0x3C5,
    0x304, 0x3C5, 0x308, 0x300, 0x3C5, 0x308, 0x301, 0x3C1, 0x313, 0x3C1, 0x314, 0x3C5,
    0x342, 0x3C5, 0x308, 0x342, 0x3A5, 0x306, 0x3A5, 0x304, 0x3A5, 0x300, 0x3A5, 0x301,
    0x3A1, 0x314, 0xA8, 0x300, 0xA8, 0x301, 0x60, 0x3C9, 0x300, 0x345, 0x3C9, 0x345,
    0x3C9, 0x301, 0x345, 0x3C9, 0x342, 0x3C9, 0x342, 0x345, 0x39F, 0x300, 0x39F, 0x301,
    0x3A9, 0x300, 0x3A9, 0x301, 0x3A9, 0x345, 0xB4, 0x2002, 0x2003, 0x3A9, 0x4B, 0x41,
    0x30A, 0x2190, 0x338, 0x2192, 0x338, 0x2194, 0x338, 0x21D0, 0x338, 0x21D4, 0x338, 0x21D2,
    0x338, 0x2203, 0x338, 0x2208, 0x338, 0x220B, 0x338, 0x2223, 0x338, 0x2225, 0x338, 0x223C,
    0x338, 0x2243, 0x338, 0x2245, 0x338, 0x2248, 0x338, 0x3D, 0x338, 0x2261, 0x338, 0x224D,
    0x338, 0x3C, 0x338, 0x3E, 0x338, 0x2264, 0x338, 0x2265, 0x338, 0x2272, 0x338, 0x2273,
    0x338, 0x2276, 0x338, 0x2277, 0x338, 0x227A, 0x338, 0x227B, 0x338, 0x2282, 0x338, 0x2283,
    0x338, 0x2286, 0x338, 0x2287, 0x338, 0x22A2, 0x338, 0x22A8, 0x338, 0x22A9, 0x338, 0x22AB,
    0x338, 0x227C, 0x338, 0x227D, 0x338, 0x2291, 0x338, 0x2292, 0x338, 0x22B2, 0x338, 0x22B3,
    0x338, 0x22B4, 0x338, 0x22B5, 0x338, 0x3008, 0x3009, 0x2ADD, 0x338, 0x304B, 0x3099, 0x304D,
    0x3099, 0x304F, 0x3099, 0x3051, 0x3099, 0x3053, 0x3099, 0x3055, 0x3099, 0x3057, 0x3099, 0x3059,
    0x3099, 0x305B, 0x3099, 0x305D, 0x3099, 0x305F, 0x3099, 0x3061, 0x3099, 0x3064, 0x3099, 0x3066,
    0x3099, 0x3068, 0x3099, 0x306F, 0x3099, 0x306F, 0x309A, 0x3072, 0x3099, 0x3072, 0x309A, 0x3075,
    0x3099, 0x3075, 0x309A, 0x3078, 0x3099, 0x3078, 0x309A, 0x307B, 0x3099, 0x307B, 0x309A, 0x3046,
    0x3099, 0x309D, 0x3099, 0x30AB, 0x3099, 0x30AD, 0x3099, 0x30AF, 0x3099, 0x30B1, 0x3099, 0x30B3,
    0x3099, 0x30B5, 0x3099, 0x30B7, 0x3099, 0x30B9, 0x3099, 0x30BB, 0x3099, 0x30BD, 0x3099, 0x30BF,
    0x3099, 0x30C1, 0x3099, 0x30C4, 0x3099, 0x30C6, 0x3099, 0x30C8, 0x3099, 0x30CF, 0x3099, 0x30CF,
    0x309A, 0x30D2, 0x3099, 0x30D2, 0x309A, 0x30D5, 0x3099, 0x30D5, 0x309A, 0x30D8, 0x3099, 0x30D8,
    0x309A, 0x30DB, 0x3099, 0x30DB, 0x309A, 0x30A6, 0x3099, 0x30EF, 0x3099, 0x30F0, 0x3099, 0x30F1,
    0x3099, 0x30F2, 0x3099, 0x30FD, 0x3099, 0x8C48, 0x66F4, 0x8ECA, 0x8CC8, 0x6ED1, 0x4E32, 0x53E5,
    0x9F9C, 0x9F9C, 0x5951, 0x91D1, 0x5587, 0x5948, 0x61F6, 0x7669, 0x7F85, 0x863F, 0x87BA, 0x88F8,
    0x908F, 0x6A02, 0x6D1B, 0x70D9, 0x73DE, 0x843D, 0x916A, 0x99F1, 0x4E82, 0x5375, 0x6B04, 0x721B,
    0x862D, 0x9E1E, 0x5D50, 0x6FEB, 0x85CD, 0x8964, 0x62C9, 0x81D8, 0x881F, 0x5ECA, 0x6717, 0x6D6A,
    0x72FC, 0x90CE, 0x4F86, 0x51B7, 0x52DE, 0x64C4, 0x6AD3, 0x7210, 0x76E7, 0x8001, 0x8606, 0x865C,
    0x8DEF, 0x9732, 0x9B6F, 0x9DFA, 0x788C, 0x797F, 0x7DA0, 0x83C9, 0x9304, 0x9E7F, 0x8AD6, 0x58DF,
    0x5F04, 0x7C60, 0x807E, 0x7262, 0x78CA, 0x8CC2, 0x96F7, 0x58D8, 0x5C62, 0x6A13, 0x6DDA, 0x6F0F,
    0x7D2F, 0x7E37, 0x964B, 0x52D2, 0x808B, 0x51DC, 0x51CC, 0x7A1C, 0x7DBE, 0x83F1, 0x9675, 0x8B80,
    0x62CF, 0x6A02, 0x8AFE, 0x4E39, 0x5BE7, 0x6012, 0x7387, 0x7570, 0x5317, 0x78FB, 0x4FBF, 0x5FA9,
    0x4E0D, 0x6CCC, 0x6578, 0x7D22, 0x53C3, 0x585E, 0x7701, 0x8449, 0x8AAA, 0x6BBA, 0x8FB0, 0x6C88,
    0x62FE, 0x82E5, 0x63A0, 0x7565, 0x4EAE, 0x5169, 0x51C9, 0x6881, 0x7CE7, 0x826F, 0x8AD2, 0x91CF,
    0x52F5, 0x5442, 0x5973, 0x5EEC, 0x65C5, 0x6FFE, 0x792A, 0x95AD, 0x9A6A, 0x9E97, 0x9ECE, 0x529B,
    0x66C6, 0x6B77, 0x8F62, 0x5E74, 0x6190, 0x6200, 0x649A, 0x6F23, 0x7149, 0x7489, 0x79CA, 0x7DF4,
    0x806F, 0x8F26, 0x84EE, 0x9023, 0x934A, 0x5217, 0x52A3, 0x54BD, 0x70C8, 0x88C2, 0x8AAA, 0x5EC9,
    0x5FF5, 0x637B, 0x6BAE, 0x7C3E, 0x7375, 0x4EE4, 0x56F9, 0x5BE7, 0x5DBA, 0x601C, 0x73B2, 0x7469,
    0x7F9A, 0x8046, 0x9234, 0x96F6, 0x9748, 0x9818, 0x4F8B, 0x79AE, 0x91B4, 0x96B8, 0x60E1, 0x4E86,
    0x50DA, 0x5BEE, 0x5C3F, 0x6599, 0x6A02, 0x71CE, 0x7642, 0x84FC, 0x907C, 0x9F8D, 0x6688, 0x962E,
    0x5289, 0x677B, 0x67F3, 0x6D41, 0x6E9C, 0x7409, 0x7559, 0x786B, 0x7D10, 0x985E, 0x516D, 0x622E,
    0x9678, 0x502B, 0x5D19, 0x6DEA, 0x8F2A, 0x5F8B, 0x6144, 0x6817, 0x7387, 0x9686, 0x5229, 0x540F,
    0x5C65, 0x6613, 0x674E, 0x68A8, 0x6CE5, 0x7406, 0x75E2, 0x7F79, 0x88CF, 0x88E1, 0x91CC, 0x96E2,
    0x533F, 0x6EBA, 0x541D, 0x71D0, 0x7498, 0x85FA, 0x96A3, 0x9C57, 0x9E9F, 0x6797, 0x6DCB, 0x81E8,
    0x7ACB, 0x7B20, 0x7C92, 0x72C0, 0x7099, 0x8B58, 0x4EC0, 0x8336, 0x523A, 0x5207, 0x5EA6, 0x62D3,
    0x7CD6, 0x5B85, 0x6D1E, 0x66B4, 0x8F3B, 0x884C, 0x964D, 0x898B, 0x5ED3, 0x5140, 0x55C0, 0x585A,
    0x6674, 0x51DE, 0x732A, 0x76CA, 0x793C, 0x795E, 0x7965, 0x798F, 0x9756, 0x7CBE, 0x7FBD, 0x8612,
    0x8AF8, 0x9038, 0x90FD, 0x98EF, 0x98FC, 0x9928, 0x9DB4, 0x90DE, 0x96B7, 0x4FAE, 0x50E7, 0x514D,
    0x52C9, 0x52E4, 0x5351, 0x559D, 0x5606, 0x5668, 0x5840, 0x58A8, 0x5C64, 0x5C6E, 0x6094, 0x6168,
    0x618E, 0x61F2, 0x654F, 0x65E2, 0x6691, 0x6885, 0x6D77, 0x6E1A, 0x6F22, 0x716E, 0x722B, 0x7422,
    0x7891, 0x793E, 0x7949, 0x7948, 0x7950, 0x7956, 0x795D, 0x798D, 0x798E, 0x7A40, 0x7A81, 0x7BC0,
    0x7DF4, 0x7E09, 0x7E41, 0x7F72, 0x8005, 0x81ED, 0x8279, 0x8279, 0x8457, 0x8910, 0x8996, 0x8B01,
    0x8B39, 0x8CD3, 0x8D08, 0x8FB6, 0x9038, 0x96E3, 0x97FF, 0x983B, 0x6075, 0x242EE, 0x8218, 0x4E26,
    0x51B5, 0x5168, 0x4F80, 0x5145, 0x5180, 0x52C7, 0x52FA, 0x559D, 0x5555, 0x5599, 0x55E2, 0x585A,
    0x58B3, 0x5944, 0x5954, 0x5A62, 0x5B28, 0x5ED2, 0x5ED9, 0x5F69, 0x5FAD, 0x60D8, 0x614E, 0x6108,
    0x618E, 0x6160, 0x61F2, 0x6234, 0x63C4, 0x641C, 0x6452, 0x6556, 0x6674, 0x6717, 0x671B, 0x6756,
    0x6B79, 0x6BBA, 0x6D41, 0x6EDB, 0x6ECB, 0x6F22, 0x701E, 0x716E, 0x77A7, 0x7235, 0x72AF, 0x732A,
    0x7471, 0x7506, 0x753B, 0x761D, 0x761F, 0x76CA, 0x76DB, 0x76F4, 0x774A, 0x7740, 0x78CC, 0x7AB1,
    0x7BC0, 0x7C7B, 0x7D5B, 0x7DF4, 0x7F3E, 0x8005, 0x8352, 0x83EF, 0x8779, 0x8941, 0x8986, 0x8996,
    0x8ABF, 0x8AF8, 0x8ACB, 0x8B01, 0x8AFE, 0x8AED, 0x8B39, 0x8B8A, 0x8D08, 0x8F38, 0x9072, 0x9199,
    0x9276, 0x967C, 0x96E3, 0x9756, 0x97DB, 0x97FF, 0x980B, 0x983B, 0x9B12, 0x9F9C, 0x2284A, 0x22844,
    0x233D5, 0x3B9D, 0x4018, 0x4039, 0x25249, 0x25CD0, 0x27ED3, 0x9F43, 0x9F8E, 0x5D9, 0x5B4, 0x5F2,
    0x5B7, 0x5E9, 0x5C1, 0x5E9, 0x5C2, 0x5E9, 0x5BC, 0x5C1, 0x5E9, 0x5BC, 0x5C2, 0x5D0,
    0x5B7, 0x5D0, 0x5B8, 0x5D0, 0x5BC, 0x5D1, 0x5BC, 0x5D2, 0x5BC, 0x5D3, 0x5BC, 0x5D4,
    0x5BC, 0x5D5, 0x5BC, 0x5D6, 0x5BC, 0x5D8, 0x5BC, 0x5D9, 0x5BC, 0x5DA, 0x5BC, 0x5DB,
    0x5BC, 0x5DC, 0x5BC, 0x5DE, 0x5BC, 0x5E0, 0x5BC, 0x5E1, 0x5BC, 0x5E3, 0x5BC, 0x5E4,
    0x5BC, 0x5E6, 0x5BC, 0x5E7, 0x5BC, 0x5E8, 0x5BC, 0x5E9, 0x5BC, 0x5EA, 0x5BC, 0x5D5,
    0x5B9, 0x5D1, 0x5BF, 0x5DB, 0x5BF, 0x5E4, 0x5BF, 0x11099, 0x110BA, 0x1109B, 0x110BA, 0x110A5,
    0x110BA, 0x11131, 0x11127, 0x11132, 0x11127, 0x11347, 0x1133E, 0x11347, 0x11357, 0x114B9, 0x114BA, 0x114B9,
    0x114B0, 0x114B9, 0x114BD, 0x115B8, 0x115AF, 0x115B9, 0x115AF, 0x11935, 0x11930, 0x1D157, 0x1D165, 0x1D158,
    0x1D165, 0x1D158, 0x1D165, 0x1D16E, 0x1D158, 0x1D165, 0x1D16F, 0x1D158, 0x1D165, 0x1D170, 0x1D158, 0x1D165,
    0x1D171, 0x1D158, 0x1D165, 0x1D172, 0x1D1B9, 0x1D165, 0x1D1BA, 0x1D165, 0x1D1B9, 0x1D165, 0x1D16E, 0x1D1BA,
    0x1D165, 0x1D16E, 0x1D1B9, 0x1D165, 0x1D16F, 0x1D1BA, 0x1D165, 0x1D16F, 0x4E3D, 0x4E38, 0x4E41, 0x20122,
    0x4F60, 0x4FAE, 0x4FBB, 0x5002, 0x507A, 0x5099, 0x50E7, 0x50CF, 0x349E, 0x2063A, 0x514D, 0x5154,
    0x5164, 0x5177, 0x2051C, 0x34B9, 0x5167, 0x518D, 0x2054B, 0x5197, 0x51A4, 0x4ECC, 0x51AC, 0x51B5,
    0x291DF, 0x51F5, 0x5203, 0x34DF, 0x523B, 0x5246, 0x5272, 0x5277, 0x3515, 0x52C7, 0x52C9, 0x52E4,
    0x52FA, 0x5305, 0x5306, 0x5317, 0x5349, 0x5351, 0x535A, 0x5373, 0x537D, 0x537F, 0x537F, 0x537F,
    0x20A2C, 0x7070, 0x53CA, 0x53DF, 0x20B63, 0x53EB, 0x53F1, 0x5406, 0x549E, 0x5438, 0x5448, 0x5468,
    0x54A2, 0x54F6, 0x5510, 0x5553, 0x5563, 0x5584, 0x5584, 0x5599, 0x55AB, 0x55B3, 0x55C2, 0x5716,
    0x5606, 0x5717, 0x5651, 0x5674, 0x5207, 0x58EE, 0x57CE, 0x57F4, 0x580D, 0x578B, 0x5832, 0x5831,
    0x58AC, 0x214E4, 0x58F2, 0x58F7, 0x5906, 0x591A, 0x5922, 0x5962, 0x216A8, 0x216EA, 0x59EC, 0x5A1B,
    0x5A27, 0x59D8, 0x5A66, 0x36EE, 0x36FC, 0x5B08, 0x5B3E, 0x5B3E, 0x219C8, 0x5BC3, 0x5BD8, 0x5BE7,
    0x5BF3, 0x21B18, 0x5BFF, 0x5C06, 0x5F53, 0x5C22, 0x3781, 0x5C60, 0x5C6E, 0x5CC0, 0x5C8D, 0x21DE4,
    0x5D43, 0x21DE6, 0x5D6E, 0x5D6B, 0x5D7C, 0x5DE1, 0x5DE2, 0x382F, 0x5DFD, 0x5E28, 0x5E3D, 0x5E69,
    0x3862, 0x22183, 0x387C, 0x5EB0, 0x5EB3, 0x5EB6, 0x5ECA, 0x2A392, 0x5EFE, 0x22331, 0x22331, 0x8201,
    0x5F22, 0x5F22, 0x38C7, 0x232B8, 0x261DA, 0x5F62, 0x5F6B, 0x38E3, 0x5F9A, 0x5FCD, 0x5FD7, 0x5FF9,
    0x6081, 0x393A, 0x391C, 0x6094, 0x226D4, 0x60C7, 0x6148, 0x614C, 0x614E, 0x614C, 0x617A, 0x618E,
    0x61B2, 0x61A4, 0x61AF, 0x61DE, 0x61F2, 0x61F6, 0x6210, 0x621B, 0x625D, 0x62B1, 0x62D4, 0x6350,
    0x22B0C, 0x633D, 0x62FC, 0x6368, 0x6383, 0x63E4, 0x22BF1, 0x6422, 0x63C5, 0x63A9, 0x3A2E, 0x6469,
    0x647E, 0x649D, 0x6477, 0x3A6C, 0x654F, 0x656C, 0x2300A, 0x65E3, 0x66F8, 0x6649, 0x3B19, 0x6691,
    0x3B08, 0x3AE4, 0x5192, 0x5195, 0x6700, 0x669C, 0x80AD, 0x43D9, 0x6717, 0x671B, 0x6721, 0x675E,
    0x6753, 0x233C3, 0x3B49, 0x67FA, 0x6785, 0x6852, 0x6885, 0x2346D, 0x688E, 0x681F, 0x6914, 0x3B9D,
    0x6942, 0x69A3, 0x69EA, 0x6AA8, 0x236A3, 0x6ADB, 0x3C18, 0x6B21, 0x238A7, 0x6B54, 0x3C4E, 0x6B72,
    0x6B9F, 0x6BBA, 0x6BBB, 0x23A8D, 0x21D0B, 0x23AFA, 0x6C4E, 0x23CBC, 0x6CBF, 0x6CCD, 0x6C67, 0x6D16,
    0x6D3E, 0x6D77, 0x6D41, 0x6D69, 0x6D78, 0x6D85, 0x23D1E, 0x6D34, 0x6E2F, 0x6E6E, 0x3D33, 0x6ECB,
    0x6EC7, 0x23ED1, 0x6DF9, 0x6F6E, 0x23F5E, 0x23F8E, 0x6FC6, 0x7039, 0x701E, 0x701B, 0x3D96, 0x704A,
    0x707D, 0x7077, 0x70AD, 0x20525, 0x7145, 0x24263, 0x719C, 0x243AB, 0x7228, 0x7235, 0x7250, 0x24608,
    0x7280, 0x7295, 0x24735, 0x24814, 0x737A, 0x738B, 0x3EAC, 0x73A5, 0x3EB8, 0x3EB8, 0x7447, 0x745C,
    0x7471, 0x7485, 0x74CA, 0x3F1B, 0x7524, 0x24C36, 0x753E, 0x24C92, 0x7570, 0x2219F, 0x7610, 0x24FA1,
    0x24FB8, 0x25044, 0x3FFC, 0x4008, 0x76F4, 0x250F3, 0x250F2, 0x25119, 0x25133, 0x771E, 0x771F, 0x771F,
    0x774A, 0x4039, 0x778B, 0x4046, 0x4096, 0x2541D, 0x784E, 0x788C, 0x78CC, 0x40E3, 0x25626, 0x7956,
    0x2569A, 0x256C5, 0x798F, 0x79EB, 0x412F, 0x7A40, 0x7A4A, 0x7A4F, 0x2597C, 0x25AA7, 0x25AA7, 0x7AEE,
    0x4202, 0x25BAB, 0x7BC6, 0x7BC9, 0x4227, 0x25C80, 0x7CD2, 0x42A0, 0x7CE8, 0x7CE3, 0x7D00, 0x25F86,
    0x7D63, 0x4301, 0x7DC7, 0x7E02, 0x7E45, 0x4334, 0x26228, 0x26247, 0x4359, 0x262D9, 0x7F7A, 0x2633E,
    0x7F95, 0x7FFA, 0x8005, 0x264DA, 0x26523, 0x8060, 0x265A8, 0x8070, 0x2335F, 0x43D5, 0x80B2, 0x8103,
    0x440B, 0x813E, 0x5AB5, 0x267A7, 0x267B5, 0x23393, 0x2339C, 0x8201, 0x8204, 0x8F9E, 0x446B, 0x8291,
    0x828B, 0x829D, 0x52B3, 0x82B1, 0x82B3, 0x82BD, 0x82E6, 0x26B3C, 0x82E5, 0x831D, 0x8363, 0x83AD,
    0x8323, 0x83BD, 0x83E7, 0x8457, 0x8353, 0x83CA, 0x83CC, 0x83DC, 0x26C36, 0x26D6B, 0x26CD5, 0x452B,
    0x84F1, 0x84F3, 0x8516, 0x273CA, 0x8564, 0x26F2C, 0x455D, 0x4561, 0x26FB1, 0x270D2, 0x456B, 0x8650,
    0x865C, 0x8667, 0x8669, 0x86A9, 0x8688, 0x870E, 0x86E2, 0x8779, 0x8728, 0x876B, 0x8786, 0x45D7,
    0x87E1, 0x8801, 0x45F9, 0x8860, 0x8863, 0x27667, 0x88D7, 0x88DE, 0x4635, 0x88FA, 0x34BB, 0x278AE,
    0x27966, 0x46BE, 0x46C7, 0x8AA0, 0x8AED, 0x8B8A, 0x8C55, 0x27CA8, 0x8CAB, 0x8CC1, 0x8D1B, 0x8D77,
    0x27F2F, 0x20804, 0x8DCB, 0x8DBC, 0x8DF0, 0x208DE, 0x8ED4, 0x8F38, 0x285D2, 0x285ED, 0x9094, 0x90F1,
    0x9111, 0x2872E, 0x911B, 0x9238, 0x92D7, 0x92D8, 0x927C, 0x93F9, 0x9415, 0x28BFA, 0x958B, 0x4995,
    0x95B7, 0x28D77, 0x49E6, 0x96C3, 0x5DB2, 0x9723, 0x29145, 0x2921A, 0x4A6E, 0x4A76, 0x97E0, 0x2940A,
    0x4AB2, 0x29496, 0x980B, 0x980B, 0x9829, 0x295B6, 0x98E2, 0x4B33, 0x9929, 0x99A7, 0x99C2, 0x99FE,
    0x4BCE, 0x29B30, 0x9B12, 0x9C40, 0x9CFD, 0x4CCE, 0x4CED, 0x9D67, 0x2A0CE, 0x4CF8, 0x2A105, 0x2A20E,
    0x2A291, 0x9EBB, 0x4D56, 0x9EF9, 0x9EFE, 0x9F05, 0x9F0F, 0x9F16, 0x9F3B, 0x2A600, 0x61, 0x62,
    0x63, 0x64, 0x65, 0x66, 0x67, 0x68, 0x69, 0x6A, 0x6B, 0x6C, 0x6D, 0x6E,
    0x6F, 0x70, 0x71, 0x72, 0x73, 0x74, 0x75, 0x76, 0x77, 0x78, 0x79, 0x7A,
    0xE0, 0xE1, 0xE2, 0xE3, 0xE4, 0xE5, 0xE6, 0xE7, 0xE8, 0xE9, 0xEA, 0xEB,
    0xEC, 0xED, 0xEE, 0xEF, 0xF0, 0xF1, 0xF2, 0xF3, 0xF4, 0xF5, 0xF6, 0xF8,
    0xF9, 0xFA, 0xFB, 0xFC, 0xFD, 0xFE, 0x101, 0x103, 0x105, 0x107, 0x109, 0x10B,
    0x10D, 0x10F, 0x111, 0x113, 0x115, 0x117, 0x119, 0x11B, 0x11D, 0x11F, 0x121, 0x123,
    0x125, 0x127, 0x129, 0x12B, 0x12D, 0x12F, 0x69, 0x307, 0x133, 0x135, 0x137, 0x13A,
    0x13C, 0x13E, 0x140, 0x142, 0x144, 0x146, 0x148, 0x14B, 0x14D, 0x14F, 0x151, 0x153,
    0x155, 0x157, 0x159, 0x15B, 0x15D, 0x15F, 0x161, 0x163, 0x165, 0x167, 0x169, 0x16B,
    0x16D, 0x16F, 0x171, 0x173, 0x175, 0x177, 0xFF, 0x17A, 0x17C, 0x17E, 0x253, 0x183,
    0x185, 0x254, 0x188, 0x256, 0x257, 0x18C, 0x1DD, 0x259, 0x25B, 0x192, 0x260, 0x263,
    0x269, 0x268, 0x199, 0x26F, 0x272, 0x275, 0x1A1, 0x1A3, 0x1A5, 0x280, 0x1A8, 0x283,
    0x1AD, 0x288, 0x1B0, 0x28A, 0x28B, 0x1B4, 0x1B6, 0x292, 0x1B9, 0x1BD, 0x1C6, 0x1C6,
    0x1C9, 0x1C9, 0x1CC, 0x1CC, 0x1CE, 0x1D0, 0x1D2, 0x1D4, 0x1D6, 0x1D8, 0x1DA, 0x1DC,
    0x1DF, 0x1E1, 0x1E3, 0x1E5, 0x1E7, 0x1E9, 0x1EB, 0x1ED, 0x1EF, 0x1F3, 0x1F3, 0x1F5,
    0x195, 0x1BF, 0x1F9, 0x1FB, 0x1FD, 0x1FF, 0x201, 0x203, 0x205, 0x207, 0x209, 0x20B,
    0x20D, 0x20F, 0x211, 0x213, 0x215, 0x217, 0x219, 0x21B, 0x21D, 0x21F, 0x19E, 0x223,
    0x225, 0x227, 0x229, 0x22B, 0x22D, 0x22F, 0x231, 0x233, 0x2C65, 0x23C, 0x19A, 0x2C66,
    0x242, 0x180, 0x289, 0x28C, 0x247, 0x249, 0x24B, 0x24D, 0x24F, 0x371, 0x373, 0x377,
    0x3F3, 0x3AC, 0x3AD, 0x3AE, 0x3AF, 0x3CC, 0x3CD, 0x3CE, 0x3B1, 0x3B2, 0x3B3, 0x3B4,
    0x3B5, 0x3B6, 0x3B7, 0x3B8, 0x3B9, 0x3BA, 0x3BB, 0x3BC, 0x3BD, 0x3BE, 0x3BF, 0x3C0,
    0x3C1, 0x3C3, 0x3C4, 0x3C5, 0x3C6, 0x3C7, 0x3C8, 0x3C9, 0x3CA, 0x3CB, 0x3D7, 0x3D9,
    0x3DB, 0x3DD, 0x3DF, 0x3E1, 0x3E3, 0x3E5, 0x3E7, 0x3E9, 0x3EB, 0x3ED, 0x3EF, 0x3B8,
    0x3F8, 0x3F2, 0x3FB, 0x37B, 0x37C, 0x37D, 0x450, 0x451, 0x452, 0x453, 0x454, 0x455,
    0x456, 0x457, 0x458, 0x459, 0x45A, 0x45B, 0x45C, 0x45D, 0x45E, 0x45F, 0x430, 0x431,
    0x432, 0x433, 0x434, 0x435, 0x436, 0x437, 0x438, 0x439, 0x43A, 0x43B, 0x43C, 0x43D,
    0x43E, 0x43F, 0x440, 0x441, 0x442, 0x443, 0x444, 0x445, 0x446, 0x447, 0x448, 0x449,
    0x44A, 0x44B, 0x44C, 0x44D, 0x44E, 0x44F, 0x461, 0x463, 0x465, 0x467, 0x469, 0x46B,
    0x46D, 0x46F, 0x471, 0x473, 0x475, 0x477, 0x479, 0x47B, 0x47D, 0x47F, 0x481, 0x48B,
    0x48D, 0x48F, 0x491, 0x493, 0x495, 0x497, 0x499, 0x49B, 0x49D, 0x49F, 0x4A1, 0x4A3,
    0x4A5, 0x4A7, 0x4A9, 0x4AB, 0x4AD, 0x4AF, 0x4B1, 0x4B3, 0x4B5, 0x4B7, 0x4B9, 0x4BB,
    0x4BD, 0x4BF, 0x4CF, 0x4C2, 0x4C4, 0x4C6, 0x4C8, 0x4CA, 0x4CC, 0x4CE, 0x4D1, 0x4D3,
    0x4D5, 0x4D7, 0x4D9, 0x4DB, 0x4DD, 0x4DF, 0x4E1, 0x4E3, 0x4E5, 0x4E7, 0x4E9, 0x4EB,
    0x4ED, 0x4EF, 0x4F1, 0x4F3, 0x4F5, 0x4F7, 0x4F9, 0x4FB, 0x4FD, 0x4FF, 0x501, 0x503,
    0x505, 0x507, 0x509, 0x50B, 0x50D, 0x50F, 0x511, 0x513, 0x515, 0x517, 0x519, 0x51B,
    0x51D, 0x51F, 0x521, 0x523, 0x525, 0x527, 0x529, 0x52B, 0x52D, 0x52F, 0x561, 0x562,
    0x563, 0x564, 0x565, 0x566, 0x567, 0x568, 0x569, 0x56A, 0x56B, 0x56C, 0x56D, 0x56E,
    0x56F, 0x570, 0x571, 0x572, 0x573, 0x574, 0x575, 0x576, 0x577, 0x578, 0x579, 0x57A,
    0x57B, 0x57C, 0x57D, 0x57E, 0x57F, 0x580, 0x581, 0x582, 0x583, 0x584, 0x585, 0x586,
    0x2D00, 0x2D01, 0x2D02, 0x2D03, 0x2D04, 0x2D05, 0x2D06, 0x2D07, 0x2D08, 0x2D09, 0x2D0A, 0x2D0B,
    0x2D0C, 0x2D0D, 0x2D0E, 0x2D0F, 0x2D10, 0x2D11, 0x2D12, 0x2D13, 0x2D14, 0x2D15, 0x2D16, 0x2D17,
    0x2D18, 0x2D19, 0x2D1A, 0x2D1B, 0x2D1C, 0x2D1D, 0x2D1E, 0x2D1F, 0x2D20, 0x2D21, 0x2D22, 0x2D23,
    0x2D24, 0x2D25, 0x2D27, 0x2D2D, 0xAB70, 0xAB71, 0xAB72, 0xAB73, 0xAB74, 0xAB75, 0xAB76, 0xAB77,
    0xAB78, 0xAB79, 0xAB7A, 0xAB7B, 0xAB7C, 0xAB7D, 0xAB7E, 0xAB7F, 0xAB80, 0xAB81, 0xAB82, 0xAB83,
    0xAB84, 0xAB85, 0xAB86, 0xAB87, 0xAB88, 0xAB89, 0xAB8A, 0xAB8B, 0xAB8C, 0xAB8D, 0xAB8E, 0xAB8F,
    0xAB90, 0xAB91, 0xAB92, 0xAB93, 0xAB94, 0xAB95, 0xAB96, 0xAB97, 0xAB98, 0xAB99, 0xAB9A, 0xAB9B,
    0xAB9C, 0xAB9D, 0xAB9E, 0xAB9F, 0xABA0, 0xABA1, 0xABA2, 0xABA3, 0xABA4, 0xABA5, 0xABA6, 0xABA7,
    0xABA8, 0xABA9, 0xABAA, 0xABAB, 0xABAC, 0xABAD, 0xABAE, 0xABAF, 0xABB0, 0xABB1, 0xABB2, 0xABB3,
    0xABB4, 0xABB5, 0xABB6, 0xABB7, 0xABB8, 0xABB9, 0xABBA, 0xABBB, 0xABBC, 0xABBD, 0xABBE, 0xABBF,
    0x13F8, 0x13F9, 0x13FA, 0x13FB, 0x13FC, 0x13FD, 0x10D0, 0x10D1, 0x10D2, 0x10D3, 0x10D4, 0x10D5,
    0x10D6, 0x10D7, 0x10D8, 0x10D9, 0x10DA, 0x10DB, 0x10DC, 0x10DD, 0x10DE, 0x10DF, 0x10E0, 0x10E1,
    0x10E2, 0x10E3, 0x10E4, 0x10E5, 0x10E6, 0x10E7, 0x10E8, 0x10E9, 0x10EA, 0x10EB, 0x10EC, 0x10ED,
    0x10EE, 0x10EF, 0x10F0, 0x10F1, 0x10F2, 0x10F3, 0x10F4, 0x10F5, 0x10F6, 0x10F7, 0x10F8, 0x10F9,
    0x10FA, 0x10FD, 0x10FE, 0x10FF, 0x1E01, 0x1E03, 0x1E05, 0x1E07, 0x1E09, 0x1E0B, 0x1E0D, 0x1E0F,
    0x1E11, 0x1E13, 0x1E15, 0x1E17, 0x1E19, 0x1E1B, 0x1E1D, 0x1E1F, 0x1E21, 0x1E23, 0x1E25, 0x1E27,
    0x1E29, 0x1E2B, 0x1E2D, 0x1E2F, 0x1E31, 0x1E33, 0x1E35, 0x1E37, 0x1E39, 0x1E3B, 0x1E3D, 0x1E3F,
    0x1E41, 0x1E43, 0x1E45, 0x1E47, 0x1E49, 0x1E4B, 0x1E4D, 0x1E4F, 0x1E51, 0x1E53, 0x1E55, 0x1E57,
    0x1E59, 0x1E5B, 0x1E5D, 0x1E5F, 0x1E61, 0x1E63, 0x1E65, 0x1E67, 0x1E69, 0x1E6B, 0x1E6D, 0x1E6F,
    0x1E71, 0x1E73, 0x1E75, 0x1E77, 0x1E79, 0x1E7B, 0x1E7D, 0x1E7F, 0x1E81, 0x1E83, 0x1E85, 0x1E87,
    0x1E89, 0x1E8B, 0x1E8D, 0x1E8F, 0x1E91, 0x1E93, 0x1E95, 0xDF, 0x1EA1, 0x1EA3, 0x1EA5, 0x1EA7,
    0x1EA9, 0x1EAB, 0x1EAD, 0x1EAF, 0x1EB1, 0x1EB3, 0x1EB5, 0x1EB7, 0x1EB9, 0x1EBB, 0x1EBD, 0x1EBF,
    0x1EC1, 0x1EC3, 0x1EC5, 0x1EC7, 0x1EC9, 0x1ECB, 0x1ECD, 0x1ECF, 0x1ED1, 0x1ED3, 0x1ED5, 0x1ED7,
    0x1ED9, 0x1EDB, 0x1EDD, 0x1EDF, 0x1EE1, 0x1EE3, 0x1EE5, 0x1EE7, 0x1EE9, 0x1EEB, 0x1EED, 0x1EEF,
    0x1EF1, 0x1EF3, 0x1EF5, 0x1EF7, 0x1EF9, 0x1EFB, 0x1EFD, 0x1EFF, 0x1F00, 0x1F01, 0x1F02, 0x1F03,
    0x1F04, 0x1F05, 0x1F06, 0x1F07, 0x1F10, 0x1F11, 0x1F12, 0x1F13, 0x1F14, 0x1F15, 0x1F20, 0x1F21,
    0x1F22, 0x1F23, 0x1F24, 0x1F25, 0x1F26, 0x1F27, 0x1F30, 0x1F31, 0x1F32, 0x1F33, 0x1F34, 0x1F35,
    0x1F36, 0x1F37, 0x1F40, 0x1F41, 0x1F42, 0x1F43, 0x1F44, 0x1F45, 0x1F51, 0x1F53, 0x1F55, 0x1F57,
    0x1F60, 0x1F61, 0x1F62, 0x1F63, 0x1F64, 0x1F65, 0x1F66, 0x1F67, 0x1F80, 0x1F81, 0x1F82, 0x1F83,
    0x1F84, 0x1F85, 0x1F86, 0x1F87, 0x1F90, 0x1F91, 0x1F92, 0x1F93, 0x1F94, 0x1F95, 0x1F96, 0x1F97,
    0x1FA0, 0x1FA1, 0x1FA2, 0x1FA3, 0x1FA4, 0x1FA5, 0x1FA6, 0x1FA7, 0x1FB0, 0x1FB1, 0x1F70, 0x1F71,
    0x1FB3, 0x1F72, 0x1F73, 0x1F74, 0x1F75, 0x1FC3, 0x1FD0, 0x1FD1, 0x1F76, 0x1F77, 0x1FE0, 0x1FE1,
    0x1F7A, 0x1F7B, 0x1FE5, 0x1F78, 0x1F79, 0x1F7C, 0x1F7D, 0x1FF3, 0x3C9, 0x6B, 0xE5, 0x214E,
    0x2170, 0x2171, 0x2172, 0x2173, 0x2174, 0x2175, 0x2176, 0x2177, 0x2178, 0x2179, 0x217A, 0x217B,
    0x217C, 0x217D, 0x217E, 0x217F, 0x2184, 0x24D0, 0x24D1, 0x24D2, 0x24D3, 0x24D4, 0x24D5, 0x24D6,
    0x24D7, 0x24D8, 0x24D9, 0x24DA, 0x24DB, 0x24DC, 0x24DD, 0x24DE, 0x24DF, 0x24E0, 0x24E1, 0x24E2,
    0x24E3, 0x24E4, 0x24E5, 0x24E6, 0x24E7, 0x24E8, 0x24E9, 0x2C30, 0x2C31, 0x2C32, 0x2C33, 0x2C34,
    0x2C35, 0x2C36, 0x2C37, 0x2C38, 0x2C39, 0x2C3A, 0x2C3B, 0x2C3C, 0x2C3D, 0x2C3E, 0x2C3F, 0x2C40,
    0x2C41, 0x2C42, 0x2C43, 0x2C44, 0x2C45, 0x2C46, 0x2C47, 0x2C48, 0x2C49, 0x2C4A, 0x2C4B, 0x2C4C,
    0x2C4D, 0x2C4E, 0x2C4F, 0x2C50, 0x2C51, 0x2C52, 0x2C53, 0x2C54, 0x2C55, 0x2C56, 0x2C57, 0x2C58,
    0x2C59, 0x2C5A, 0x2C5B, 0x2C5C, 0x2C5D, 0x2C5E, 0x2C61, 0x26B, 0x1D7D, 0x27D, 0x2C68, 0x2C6A,
    0x2C6C, 0x251, 0x271, 0x250, 0x252, 0x2C73, 0x2C76, 0x23F, 0x240, 0x2C81, 0x2C83, 0x2C85,
    0x2C87, 0x2C89, 0x2C8B, 0x2C8D, 0x2C8F, 0x2C91, 0x2C93, 0x2C95, 0x2C97, 0x2C99, 0x2C9B, 0x2C9D,
    0x2C9F, 0x2CA1, 0x2CA3, 0x2CA5, 0x2CA7, 0x2CA9, 0x2CAB, 0x2CAD, 0x2CAF, 0x2CB1, 0x2CB3, 0x2CB5,
    0x2CB7, 0x2CB9, 0x2CBB, 0x2CBD, 0x2CBF, 0x2CC1, 0x2CC3, 0x2CC5, 0x2CC7, 0x2CC9, 0x2CCB, 0x2CCD,
    0x2CCF, 0x2CD1, 0x2CD3, 0x2CD5, 0x2CD7, 0x2CD9, 0x2CDB, 0x2CDD, 0x2CDF, 0x2CE1, 0x2CE3, 0x2CEC,
    0x2CEE, 0x2CF3, 0xA641, 0xA643, 0xA645, 0xA647, 0xA649, 0xA64B, 0xA64D, 0xA64F, 0xA651, 0xA653,
    0xA655, 0xA657, 0xA659, 0xA65B, 0xA65D, 0xA65F, 0xA661, 0xA663, 0xA665, 0xA667, 0xA669, 0xA66B,
    0xA66D, 0xA681, 0xA683, 0xA685, 0xA687, 0xA689, 0xA68B, 0xA68D, 0xA68F, 0xA691, 0xA693, 0xA695,
    0xA697, 0xA699, 0xA69B, 0xA723, 0xA725, 0xA727, 0xA729, 0xA72B, 0xA72D, 0xA72F, 0xA733, 0xA735,
    0xA737, 0xA739, 0xA73B, 0xA73D, 0xA73F, 0xA741, 0xA743, 0xA745, 0xA747, 0xA749, 0xA74B, 0xA74D,
    0xA74F, 0xA751, 0xA753, 0xA755, 0xA757, 0xA759, 0xA75B, 0xA75D, 0xA75F, 0xA761, 0xA763, 0xA765,
    0xA767, 0xA769, 0xA76B, 0xA76D, 0xA76F, 0xA77A, 0xA77C, 0x1D79, 0xA77F, 0xA781, 0xA783, 0xA785,
    0xA787, 0xA78C, 0x265, 0xA791, 0xA793, 0xA797, 0xA799, 0xA79B, 0xA79D, 0xA79F, 0xA7A1, 0xA7A3,
    0xA7A5, 0xA7A7, 0xA7A9, 0x266, 0x25C, 0x261, 0x26C, 0x26A, 0x29E, 0x287, 0x29D, 0xAB53,
    0xA7B5, 0xA7B7, 0xA7B9, 0xA7BB, 0xA7BD, 0xA7BF, 0xA7C3, 0xA794, 0x282, 0x1D8E, 0xA7C8, 0xA7CA,
    0xA7F6, 0xFF41, 0xFF42, 0xFF43, 0xFF44, 0xFF45, 0xFF46, 0xFF47, 0xFF48, 0xFF49, 0xFF4A, 0xFF4B,
    0xFF4C, 0xFF4D, 0xFF4E, 0xFF4F, 0xFF50, 0xFF51, 0xFF52, 0xFF53, 0xFF54, 0xFF55, 0xFF56, 0xFF57,
    0xFF58, 0xFF59, 0xFF5A, 0x10428, 0x10429, 0x1042A, 0x1042B, 0x1042C, 0x1042D, 0x1042E, 0x1042F, 0x10430,
    0x10431, 0x10432, 0x10433, 0x10434, 0x10435, 0x10436, 0x10437, 0x10438, 0x10439, 0x1043A, 0x1043B, 0x1043C,
    0x1043D, 0x1043E, 0x1043F, 0x10440, 0x10441, 0x10442, 0x10443, 0x10444, 0x10445, 0x10446, 0x10447, 0x10448,
    0x10449, 0x1044A, 0x1044B, 0x1044C, 0x1044D, 0x1044E, 0x1044F, 0x104D8, 0x104D9, 0x104DA, 0x104DB, 0x104DC,
    0x104DD, 0x104DE, 0x104DF, 0x104E0, 0x104E1, 0x104E2, 0x104E3, 0x104E4, 0x104E5, 0x104E6, 0x104E7, 0x104E8,
    0x104E9, 0x104EA, 0x104EB, 0x104EC, 0x104ED, 0x104EE, 0x104EF, 0x104F0, 0x104F1, 0x104F2, 0x104F3, 0x104F4,
    0x104F5, 0x104F6, 0x104F7, 0x104F8, 0x104F9, 0x104FA, 0x104FB, 0x10CC0, 0x10CC1, 0x10CC2, 0x10CC3, 0x10CC4,
    0x10CC5, 0x10CC6, 0x10CC7, 0x10CC8, 0x10CC9, 0x10CCA, 0x10CCB, 0x10CCC, 0x10CCD, 0x10CCE, 0x10CCF, 0x10CD0,
    0x10CD1, 0x10CD2, 0x10CD3, 0x10CD4, 0x10CD5, 0x10CD6, 0x10CD7, 0x10CD8, 0x10CD9, 0x10CDA, 0x10CDB, 0x10CDC,
    0x10CDD, 0x10CDE, 0x10CDF, 0x10CE0, 0x10CE1, 0x10CE2, 0x10CE3, 0x10CE4, 0x10CE5, 0x10CE6, 0x10CE7, 0x10CE8,
    0x10CE9, 0x10CEA, 0x10CEB, 0x10CEC, 0x10CED, 0x10CEE, 0x10CEF, 0x10CF0, 0x10CF1, 0x10CF2, 0x118C0, 0x118C1,
    0x118C2, 0x118C3, 0x118C4, 0x118C5, 0x118C6, 0x118C7, 0x118C8, 0x118C9, 0x118CA, 0x118CB, 0x118CC, 0x118CD,
    0x118CE, 0x118CF, 0x118D0, 0x118D1, 0x118D2, 0x118D3, 0x118D4, 0x118D5, 0x118D6, 0x118D7, 0x118D8, 0x118D9,
    0x118DA, 0x118DB, 0x118DC, 0x118DD, 0x118DE, 0x118DF, 0x16E60, 0x16E61, 0x16E62, 0x16E63, 0x16E64, 0x16E65,
    0x16E66, 0x16E67, 0x16E68, 0x16E69, 0x16E6A, 0x16E6B, 0x16E6C, 0x16E6D, 0x16E6E, 0x16E6F, 0x16E70, 0x16E71,
    0x16E72, 0x16E73, 0x16E74, 0x16E75, 0x16E76, 0x16E77, 0x16E78, 0x16E79, 0x16E7A, 0x16E7B, 0x16E7C, 0x16E7D,
    0x16E7E, 0x16E7F, 0x1E922, 0x1E923, 0x1E924, 0x1E925, 0x1E926, 0x1E927, 0x1E928, 0x1E929, 0x1E92A, 0x1E92B,
    0x1E92C, 0x1E92D, 0x1E92E, 0x1E92F, 0x1E930, 0x1E931, 0x1E932, 0x1E933, 0x1E934, 0x1E935, 0x1E936, 0x1E937,
    0x1E938, 0x1E939, 0x1E93A, 0x1E93B, 0x1E93C, 0x1E93D, 0x1E93E, 0x1E93F, 0x1E940, 0x1E941, 0x1E942, 0x1E943,
};

const CccEntry kCcc[] = {
    {0x300u, 230},
    {0x301u, 230},
    {0x302u, 230},
    {0x303u, 230},
    {0x304u, 230},
    {0x305u, 230},
    {0x306u, 230},
    {0x307u, 230},
    {0x308u, 230},
    {0x309u, 230},
    {0x30Au, 230},
    {0x30Bu, 230},
    {0x30Cu, 230},
    {0x30Du, 230},
    {0x30Eu, 230},
    {0x30Fu, 230},
    {0x310u, 230},
    {0x311u, 230},
    {0x312u, 230},
    {0x313u, 230},
    {0x314u, 230},
    {0x315u, 232},
    {0x316u, 220},
    {0x317u, 220},
    {0x318u, 220},
    {0x319u, 220},
    {0x31Au, 232},
    {0x31Bu, 216},
    {0x31Cu, 220},
    {0x31Du, 220},
    {0x31Eu, 220},
    {0x31Fu, 220},
    {0x320u, 220},
    {0x321u, 202},
    {0x322u, 202},
    {0x323u, 220},
    {0x324u, 220},
    {0x325u, 220},
    {0x326u, 220},
    {0x327u, 202},
    {0x328u, 202},
    {0x329u, 220},
    {0x32Au, 220},
    {0x32Bu, 220},
    {0x32Cu, 220},
    {0x32Du, 220},
    {0x32Eu, 220},
    {0x32Fu, 220},
    {0x330u, 220},
    {0x331u, 220},
    {0x332u, 220},
    {0x333u, 220},
    {0x334u, 1},
    {0x335u, 1},
    {0x336u, 1},
    {0x337u, 1},
    {0x338u, 1},
    {0x339u, 220},
    {0x33Au, 220},
    {0x33Bu, 220},
    {0x33Cu, 220},
    {0x33Du, 230},
    {0x33Eu, 230},
    {0x33Fu, 230},
    {0x340u, 230},
    {0x341u, 230},
    {0x342u, 230},
    {0x343u, 230},
    {0x344u, 230},
    {0x345u, 240},
    {0x346u, 230},
    {0x347u, 220},
    {0x348u, 220},
    {0x349u, 220},
    {0x34Au, 230},
    {0x34Bu, 230},
    {0x34Cu, 230},
    {0x34Du, 220},
    {0x34Eu, 220},
    {0x350u, 230},
    {0x351u, 230},
    {0x352u, 230},
    {0x353u, 220},
    {0x354u, 220},
    {0x355u, 220},
    {0x356u, 220},
    {0x357u, 230},
    {0x358u, 232},
    {0x359u, 220},
    {0x35Au, 220},
    {0x35Bu, 230},
    {0x35Cu, 233},
    {0x35Du, 234},
    {0x35Eu, 234},
    {0x35Fu, 233},
    {0x360u, 234},
    {0x361u, 234},
    {0x362u, 233},
    {0x363u, 230},
    {0x364u, 230},
    {0x365u, 230},
    {0x366u, 230},
    {0x367u, 230},
    {0x368u, 230},
    {0x369u, 230},
    {0x36Au, 230},
    {0x36Bu, 230},
    {0x36Cu, 230},
    {0x36Du, 230},
    {0x36Eu, 230},
    {0x36Fu, 230},
    {0x483u, 230},
    {0x484u, 230},
    {0x485u, 230},
    {0x486u, 230},
    {0x487u, 230},
    {0x591u, 220},
    {0x592u, 230},
    {0x593u, 230},
    {0x594u, 230},
    {0x595u, 230},
    {0x596u, 220},
    {0x597u, 230},
    {0x598u, 230},
    {0x599u, 230},
    {0x59Au, 222},
    {0x59Bu, 220},
    {0x59Cu, 230},
    {0x59Du, 230},
    {0x59Eu, 230},
    {0x59Fu, 230},
    {0x5A0u, 230},
    {0x5A1u, 230},
    {0x5A2u, 220},
    {0x5A3u, 220},
    {0x5A4u, 220},
    {0x5A5u, 220},
    {0x5A6u, 220},
    {0x5A7u, 220},
    {0x5A8u, 230},
    {0x5A9u, 230},
    {0x5AAu, 220},
    {0x5ABu, 230},
    {0x5ACu, 230},
    {0x5ADu, 222},
    {0x5AEu, 228},
    {0x5AFu, 230},
    {0x5B0u, 10},
    {0x5B1u, 11},
    {0x5B2u, 12},
    {0x5B3u, 13},
    {0x5B4u, 14},
    {0x5B5u, 15},
    {0x5B6u, 16},
    {0x5B7u, 17},
    {0x5B8u, 18},
    {0x5B9u, 19},
    {0x5BAu, 19},
    {0x5BBu, 20},
    {0x5BCu, 21},
    {0x5BDu, 22},
    {0x5BFu, 23},
    {0x5C1u, 24},
    {0x5C2u, 25},
    {0x5C4u, 230},
    {0x5C5u, 220},
    {0x5C7u, 18},
    {0x610u, 230},
    {0x611u, 230},
    {0x612u, 230},
    {0x613u, 230},
    {0x614u, 230},
    {0x615u, 230},
    {0x616u, 230},
    {0x617u, 230},
    {0x618u, 30},
    {0x619u, 31},
    {0x61Au, 32},
    {0x64Bu, 27},
    {0x64Cu, 28},
    {0x64Du, 29},
    {0x64Eu, 30},
    {0x64Fu, 31},
    {0x650u, 32},
    {0x651u, 33},
    {0x652u, 34},
    {0x653u, 230},
    {0x654u, 230},
    {0x655u, 220},
    {0x656u, 220},
    {0x657u, 230},
    {0x658u, 230},
    {0x659u, 230},
    {0x65Au, 230},
    {0x65Bu, 230},
    {0x65Cu, 220},
    {0x65Du, 230},
    {0x65Eu, 230},
    {0x65Fu, 220},
    {0x670u, 35},
    {0x6D6u, 230},
    {0x6D7u, 230},
    {0x6D8u, 230},
    {0x6D9u, 230},
    {0x6DAu, 230},
    {0x6DBu, 230},
    {0x6DCu, 230},
    {0x6DFu, 230},
    {0x6E0u, 230},
    {0x6E1u, 230},
    {0x6E2u, 230},
    {0x6E3u, 220},
    {0x6E4u, 230},
    {0x6E7u, 230},
    {0x6E8u, 230},
    {0x6EAu, 220},
    {0x6EBu, 230},
    {0x6ECu, 230},
    {0x6EDu, 220},
    {0x711u, 36},
    {0x730u, 230},
    {0x731u, 220},
    {0x732u, 230},
    {0x733u, 230},
    {0x734u, 220},
    {0x735u, 230},
    {0x736u, 230},
    {0x737u, 220},
    {0x738u, 220},
    {0x739u, 220},
    {0x73Au, 230},
    {0x73Bu, 220},
    {0x73Cu, 220},
    {0x73Du, 230},
    {0x73Eu, 220},
    {0x73Fu, 230},
    {0x740u, 230},
    {0x741u, 230},
    {0x742u, 220},
    {0x743u, 230},
    {0x744u, 220},
    {0x745u, 230},
    {0x746u, 220},
    {0x747u, 230},
    {0x748u, 220},
    {0x749u, 230},
    {0x74Au, 230},
    {0x7EBu, 230},
    {0x7ECu, 230},
    {0x7EDu, 230},
    {0x7EEu, 230},
    {0x7EFu, 230},
    {0x7F0u, 230},
    {0x7F1u, 230},
    {0x7F2u, 220},
    {0x7F3u, 230},
    {0x7FDu, 220},
    {0x816u, 230},
    {0x817u, 230},
    {0x818u, 230},
    {0x819u, 230},
    {0x81Bu, 230},
    {0x81Cu, 230},
    {0x81Du, 230},
    {0x81Eu, 230},
    {0x81Fu, 230},
    {0x820u, 230},
    {0x821u, 230},
    {0x822u, 230},
    {0x823u, 230},
    {0x825u, 230},
    {0x826u, 230},
    {0x827u, 230},
    {0x829u, 230},
    {0x82Au, 230},
    {0x82Bu, 230},
    {0x82Cu, 230},
    {0x82Du, 230},
    {0x859u, 220},
    {0x85Au, 220},
    {0x85Bu, 220},
    {0x8D3u, 220},
    {0x8D4u, 230},
    {0x8D5u, 230},
    {0x8D6u, 230},
    {0x8D7u, 230},
    {0x8D8u, 230},
    {0x8D9u, 230},
    {0x8DAu, 230},
    {0x8DBu, 230},
    {0x8DCu, 230},
    {0x8DDu, 230},
    {0x8DEu, 230},
    {0x8DFu, 230},
    {0x8E0u, 230},
    {0x8E1u, 230},
    {0x8E3u, 220},
    {0x8E4u, 230},
    {0x8E5u, 230},
    {0x8E6u, 220},
    {0x8E7u, 230},
    {0x8E8u, 230},
    {0x8E9u, 220},
    {0x8EAu, 230},
    {0x8EBu, 230},
    {0x8ECu, 230},
    {0x8EDu, 220},
    {0x8EEu, 220},
    {0x8EFu, 220},
    {0x8F0u, 27},
    {0x8F1u, 28},
    {0x8F2u, 29},
    {0x8F3u, 230},
    {0x8F4u, 230},
    {0x8F5u, 230},
    {0x8F6u, 220},
    {0x8F7u, 230},
    {0x8F8u, 230},
    {0x8F9u, 220},
    {0x8FAu, 220},
    {0x8FBu, 230},
    {0x8FCu, 230},
    {0x8FDu, 230},
    {0x8FEu, 230},
    {0x8FFu, 230},
    {0x93Cu, 7},
    {0x94Du, 9},
    {0x951u, 230},
    {0x952u, 220},
    {0x953u, 230},
    {0x954u, 230},
    {0x9BCu, 7},
    {0x9CDu, 9},
    {0x9FEu, 230},
    {0xA3Cu, 7},
    {0xA4Du, 9},
    {0xABCu, 7},
    {0xACDu, 9},
    {0xB3Cu, 7},
    {0xB4Du, 9},
    {0xBCDu, 9},
    {0xC4Du, 9},
    {0xC55u, 84},
    {0xC56u, 91},
    {0xCBCu, 7},
    {0xCCDu, 9},
    {0xD3Bu, 9},
    {0xD3Cu, 9},
    {0xD4Du, 9},
    {0xDCAu, 9},
    {0xE38u, 103},
    {0xE39u, 103},
    {0xE3Au, 9},
    {0xE48u, 107},
    {0xE49u, 107},
    {0xE4Au, 107},
    {0xE4Bu, 107},
    {0xEB8u, 118},
    {0xEB9u, 118},
    {0xEBAu, 9},
    {0xEC8u, 122},
    {0xEC9u, 122},
    {0xECAu, 122},
    {0xECBu, 122},
    {0xF18u, 220},
    {0xF19u, 220},
    {0xF35u, 220},
    {0xF37u, 220},
    {0xF39u, 216},
    {0xF71u, 129},
    {0xF72u, 130},
    {0xF74u, 132},
    {0xF7Au, 130},
    {0xF7Bu, 130},
    {0xF7Cu, 130},
    {0xF7Du, 130},
    {0xF80u, 130},
    {0xF82u, 230},
    {0xF83u, 230},
    {0xF84u, 9},
    {0xF86u, 230},
    {0xF87u, 230},
    {0xFC6u, 220},
    {0x1037u, 7},
    {0x1039u, 9},
    {0x103Au, 9},
    {0x108Du, 220},
    {0x135Du, 230},
    {0x135Eu, 230},
    {0x135Fu, 230},
    {0x1714u, 9},
    {0x1734u, 9},
    {0x17D2u, 9},
    {0x17DDu, 230},
    {0x18A9u, 228},
    {0x1939u, 222},
    {0x193Au, 230},
    {0x193Bu, 220},
    {0x1A17u, 230},
    {0x1A18u, 220},
    {0x1A60u, 9},
    {0x1A75u, 230},
    {0x1A76u, 230},
    {0x1A77u, 230},
    {0x1A78u, 230},
    {0x1A79u, 230},
    {0x1A7Au, 230},
    {0x1A7Bu, 230},
    {0x1A7Cu, 230},
    {0x1A7Fu, 220},
    {0x1AB0u, 230},
    {0x1AB1u, 230},
    {0x1AB2u, 230},
    {0x1AB3u, 230},
    {0x1AB4u, 230},
    {0x1AB5u, 220},
    {0x1AB6u, 220},
    {0x1AB7u, 220},
    {0x1AB8u, 220},
    {0x1AB9u, 220},
    {0x1ABAu, 220},
    {0x1ABBu, 230},
    {0x1ABCu, 230},
    {0x1ABDu, 220},
    {0x1ABFu, 220},
    {0x1AC0u, 220},
    {0x1B34u, 7},
    {0x1B44u, 9},
    {0x1B6Bu, 230},
    {0x1B6Cu, 220},
    {0x1B6Du, 230},
    {0x1B6Eu, 230},
    {0x1B6Fu, 230},
    {0x1B70u, 230},
    {0x1B71u, 230},
    {0x1B72u, 230},
    {0x1B73u, 230},
    {0x1BAAu, 9},
    {0x1BABu, 9},
    {0x1BE6u, 7},
    {0x1BF2u, 9},
    {0x1BF3u, 9},
    {0x1C37u, 7},
    {0x1CD0u, 230},
    {0x1CD1u, 230},
    {0x1CD2u, 230},
    {0x1CD4u, 1},
    {0x1CD5u, 220},
    {0x1CD6u, 220},
    {0x1CD7u, 220},
    {0x1CD8u, 220},
    {0x1CD9u, 220},
    {0x1CDAu, 230},
    {0x1CDBu, 230},
    {0x1CDCu, 220},
    {0x1CDDu, 220},
    {0x1CDEu, 220},
    {0x1CDFu, 220},
    {0x1CE0u, 230},
    {0x1CE2u, 1},
    {0x1CE3u, 1},
    {0x1CE4u, 1},
    {0x1CE5u, 1},
    {0x1CE6u, 1},
    {0x1CE7u, 1},
    {0x1CE8u, 1},
    {0x1CEDu, 220},
    {0x1CF4u, 230},
    {0x1CF8u, 230},
    {0x1CF9u, 230},
    {0x1DC0u, 230},
    {0x1DC1u, 230},
    {0x1DC2u, 220},
    {0x1DC3u, 230},
    {0x1DC4u, 230},
    {0x1DC5u, 230},
    {0x1DC6u, 230},
    {0x1DC7u, 230},
    {0x1DC8u, 230},
    {0x1DC9u, 230},
    {0x1DCAu, 220},
    {0x1DCBu, 230},
    {0x1DCCu, 230},
    {0x1DCDu, 234},
    {0x1DCEu, 214},
    {0x1DCFu, 220},
    {0x1DD0u, 202},
    {0x1DD1u, 230},
    {0x1DD2u, 230},
    {0x1DD3u, 230},
    {0x1DD4u, 230},
    {0x1DD5u, 230},
    {0x1DD6u, 230},
    {0x1DD7u, 230},
    {0x1DD8u, 230},
    {0x1DD9u, 230},
    {0x1DDAu, 230},
    {0x1DDBu, 230},
    {0x1DDCu, 230},
    {0x1DDDu, 230},
    {0x1DDEu, 230},
    {0x1DDFu, 230},
    {0x1DE0u, 230},
    {0x1DE1u, 230},
    {0x1DE2u, 230},
    {0x1DE3u, 230},
    {0x1DE4u, 230},
    {0x1DE5u, 230},
    {0x1DE6u, 230},
    {0x1DE7u, 230},
    {0x1DE8u, 230},
    {0x1DE9u, 230},
    {0x1DEAu, 230},
    {0x1DEBu, 230},
    {0x1DECu, 230},
    {0x1DEDu, 230},
    {0x1DEEu, 230},
    {0x1DEFu, 230},
    {0x1DF0u, 230},
    {0x1DF1u, 230},
    {0x1DF2u, 230},
    {0x1DF3u, 230},
    {0x1DF4u, 230},
    {0x1DF5u, 230},
    {0x1DF6u, 232},
    {0x1DF7u, 228},
    {0x1DF8u, 228},
    {0x1DF9u, 220},
    {0x1DFBu, 230},
    {0x1DFCu, 233},
    {0x1DFDu, 220},
    {0x1DFEu, 230},
    {0x1DFFu, 220},
    {0x20D0u, 230},
    {0x20D1u, 230},
    {0x20D2u, 1},
    {0x20D3u, 1},
    {0x20D4u, 230},
    {0x20D5u, 230},
    {0x20D6u, 230},
    {0x20D7u, 230},
    {0x20D8u, 1},
    {0x20D9u, 1},
    {0x20DAu, 1},
    {0x20DBu, 230},
    {0x20DCu, 230},
    {0x20E1u, 230},
    {0x20E5u, 1},
    {0x20E6u, 1},
    {0x20E7u, 230},
    {0x20E8u, 220},
    {0x20E9u, 230},
    {0x20EAu, 1},
    {0x20EBu, 1},
    {0x20ECu, 220},
    {0x20EDu, 220},
    {0x20EEu, 220},
    {0x20EFu, 220},
    {0x20F0u, 230},
    {0x2CEFu, 230},
    {0x2CF0u, 230},
    {0x2CF1u, 230},
    {0x2D7Fu, 9},
    {0x2DE0u, 230},
    {0x2DE1u, 230},
    {0x2DE2u, 230},
    {0x2DE3u, 230},
    {0x2DE4u, 230},
    {0x2DE5u, 230},
    {0x2DE6u, 230},
    {0x2DE7u, 230},
    {0x2DE8u, 230},
    {0x2DE9u, 230},
    {0x2DEAu, 230},
    {0x2DEBu, 230},
    {0x2DECu, 230},
    {0x2DEDu, 230},
    {0x2DEEu, 230},
    {0x2DEFu, 230},
    {0x2DF0u, 230},
    {0x2DF1u, 230},
    {0x2DF2u, 230},
    {0x2DF3u, 230},
    {0x2DF4u, 230},
    {0x2DF5u, 230},
    {0x2DF6u, 230},
    {0x2DF7u, 230},
    {0x2DF8u, 230},
    {0x2DF9u, 230},
    {0x2DFAu, 230},
    {0x2DFBu, 230},
    {0x2DFCu, 230},
    {0x2DFDu, 230},
    {0x2DFEu, 230},
    {0x2DFFu, 230},
    {0x302Au, 218},
    {0x302Bu, 228},
    {0x302Cu, 232},
    {0x302Du, 222},
    {0x302Eu, 224},
    {0x302Fu, 224},
    {0x3099u, 8},
    {0x309Au, 8},
    {0xA66Fu, 230},
    {0xA674u, 230},
    {0xA675u, 230},
    {0xA676u, 230},
    {0xA677u, 230},
    {0xA678u, 230},
    {0xA679u, 230},
    {0xA67Au, 230},
    {0xA67Bu, 230},
    {0xA67Cu, 230},
    {0xA67Du, 230},
    {0xA69Eu, 230},
    {0xA69Fu, 230},
    {0xA6F0u, 230},
    {0xA6F1u, 230},
    {0xA806u, 9},
    {0xA82Cu, 9},
    {0xA8C4u, 9},
    {0xA8E0u, 230},
    {0xA8E1u, 230},
    {0xA8E2u, 230},
    {0xA8E3u, 230},
    {0xA8E4u, 230},
    {0xA8E5u, 230},
    {0xA8E6u, 230},
    {0xA8E7u, 230},
    {0xA8E8u, 230},
    {0xA8E9u, 230},
    {0xA8EAu, 230},
    {0xA8EBu, 230},
    {0xA8ECu, 230},
    {0xA8EDu, 230},
    {0xA8EEu, 230},
    {0xA8EFu, 230},
    {0xA8F0u, 230},
    {0xA8F1u, 230},
    {0xA92Bu, 220},
    {0xA92Cu, 220},
    {0xA92Du, 220},
    {0xA953u, 9},
    {0xA9B3u, 7},
    {0xA9C0u, 9},
    {0xAAB0u, 230},
    {0xAAB2u, 230},
    {0xAAB3u, 230},
    {0xAAB4u, 220},
    {0xAAB7u, 230},
    {0xAAB8u, 230},
    {0xAABEu, 230},
    {0xAABFu, 230},
    {0xAAC1u, 230},
    {0xAAF6u, 9},
    {0xABEDu, 9},
    {0xFB1Eu, 26},
    {0xFE20u, 230},
    {0xFE21u, 230},
    {0xFE22u, 230},
    {0xFE23u, 230},
    {0xFE24u, 230},
    {0xFE25u, 230},
    {0xFE26u, 230},
    {0xFE27u, 220},
    {0xFE28u, 220},
    {0xFE29u, 220},
    {0xFE2Au, 220},
    {0xFE2Bu, 220},
    {0xFE2Cu, 220},
    {0xFE2Du, 220},
    {0xFE2Eu, 230},
    {0xFE2Fu, 230},
    {0x101FDu, 220},
    {0x102E0u, 220},
    {0x10376u, 230},
    {0x10377u, 230},
    {0x10378u, 230},
    {0x10379u, 230},
    {0x1037Au, 230},
    {0x10A0Du, 220},
    {0x10A0Fu, 230},
    {0x10A38u, 230},
    {0x10A39u, 1},
    {0x10A3Au, 220},
    {0x10A3Fu, 9},
    {0x10AE5u, 230},
    {0x10AE6u, 220},
    {0x10D24u, 230},
    {0x10D25u, 230},
    {0x10D26u, 230},
    {0x10D27u, 230},
    {0x10EABu, 230},
    {0x10EACu, 230},
    {0x10F46u, 220},
    {0x10F47u, 220},
    {0x10F48u, 230},
    {0x10F49u, 230},
    {0x10F4Au, 230},
    {0x10F4Bu, 220},
    {0x10F4Cu, 230},
    {0x10F4Du, 220},
    {0x10F4Eu, 220},
    {0x10F4Fu, 220},
    {0x10F50u, 220},
    {0x11046u, 9},
    {0x1107Fu, 9},
    {0x110B9u, 9},
    {0x110BAu, 7},
    {0x11100u, 230},
    {0x11101u, 230},
    {0x11102u, 230},
    {0x11133u, 9},
    {0x11134u, 9},
    {0x11173u, 7},
    {0x111C0u, 9},
    {0x111CAu, 7},
    {0x11235u, 9},
    {0x11236u, 7},
    {0x112E9u, 7},
    {0x112EAu, 9},
    {0x1133Bu, 7},
    {0x1133Cu, 7},
    {0x1134Du, 9},
    {0x11366u, 230},
    {0x11367u, 230},
    {0x11368u, 230},
    {0x11369u, 230},
    {0x1136Au, 230},
    {0x1136Bu, 230},
    {0x1136Cu, 230},
    {0x11370u, 230},
    {0x11371u, 230},
    {0x11372u, 230},
    {0x11373u, 230},
    {0x11374u, 230},
    {0x11442u, 9},
    {0x11446u, 7},
    {0x1145Eu, 230},
    {0x114C2u, 9},
    {0x114C3u, 7},
    {0x115BFu, 9},
    {0x115C0u, 7},
    {0x1163Fu, 9},
    {0x116B6u, 9},
    {0x116B7u, 7},
    {0x1172Bu, 9},
    {0x11839u, 9},
    {0x1183Au, 7},
    {0x1193Du, 9},
    {0x1193Eu, 9},
    {0x11943u, 7},
    {0x119E0u, 9},
    {0x11A34u, 9},
    {0x11A47u, 9},
    {0x11A99u, 9},
    {0x11C3Fu, 9},
    {0x11D42u, 7},
    {0x11D44u, 9},
    {0x11D45u, 9},
    {0x11D97u, 9},
    {0x16AF0u, 1},
    {0x16AF1u, 1},
    {0x16AF2u, 1},
    {0x16AF3u, 1},
    {0x16AF4u, 1},
    {0x16B30u, 230},
    {0x16B31u, 230},
    {0x16B32u, 230},
    {0x16B33u, 230},
    {0x16B34u, 230},
    {0x16B35u, 230},
    {0x16B36u, 230},
    {0x16FF0u, 6},
    {0x16FF1u, 6},
    {0x1BC9Eu, 1},
    {0x1D165u, 216},
    {0x1D166u, 216},
    {0x1D167u, 1},
    {0x1D168u, 1},
    {0x1D169u, 1},
    {0x1D16Du, 226},
    {0x1D16Eu, 216},
    {0x1D16Fu, 216},
    {0x1D170u, 216},
    {0x1D171u, 216},
    {0x1D172u, 216},
    {0x1D17Bu, 220},
    {0x1D17Cu, 220},
    {0x1D17Du, 220},
    {0x1D17Eu, 220},
    {0x1D17Fu, 220},
    {0x1D180u, 220},
    {0x1D181u, 220},
    {0x1D182u, 220},
    {0x1D185u, 230},
    {0x1D186u, 230},
    {0x1D187u, 230},
    {0x1D188u, 230},
    {0x1D189u, 230},
    {0x1D18Au, 220},
    {0x1D18Bu, 220},
    {0x1D1AAu, 230},
    {0x1D1ABu, 230},
    {0x1D1ACu, 230},
    {0x1D1ADu, 230},
    {0x1D242u, 230},
    {0x1D243u, 230},
    {0x1D244u, 230},
    {0x1E000u, 230},
    {0x1E001u, 230},
    {0x1E002u, 230},
    {0x1E003u, 230},
    {0x1E004u, 230},
    {0x1E005u, 230},
    {0x1E006u, 230},
    {0x1E008u, 230},
    {0x1E009u, 230},
    {0x1E00Au, 230},
    {0x1E00Bu, 230},
    {0x1E00Cu, 230},
    {0x1E00Du, 230},
    {0x1E00Eu, 230},
    {0x1E00Fu, 230},
    {0x1E010u, 230},
    {0x1E011u, 230},
    {0x1E012u, 230},
    {0x1E013u, 230},
    {0x1E014u, 230},
    {0x1E015u, 230},
    {0x1E016u, 230},
    {0x1E017u, 230},
    {0x1E018u, 230},
    {0x1E01Bu, 230},
    {0x1E01Cu, 230},
    {0x1E01Du, 230},
    {0x1E01Eu, 230},
    {0x1E01Fu, 230},
    {0x1E020u, 230},
    {0x1E021u, 230},
    {0x1E023u, 230},
    {0x1E024u, 230},
    {0x1E026u, 230},
    {0x1E027u, 230},
    {0x1E028u, 230},
    {0x1E029u, 230},
    {0x1E02Au, 230},
    {0x1E130u, 230},
    {0x1E131u, 230},
    {0x1E132u, 230},
    {0x1E133u, 230},
    {0x1E134u, 230},
    {0x1E135u, 230},
    {0x1E136u, 230},
    {0x1E2ECu, 230},
    {0x1E2EDu, 230},
    {0x1E2EEu, 230},
    {0x1E2EFu, 230},
    {0x1E8D0u, 220},
    {0x1E8D1u, 220},
    {0x1E8D2u, 220},
    {0x1E8D3u, 220},
    {0x1E8D4u, 220},
    {0x1E8D5u, 220},
    {0x1E8D6u, 220},
    {0x1E944u, 230},
    {0x1E945u, 230},
    {0x1E946u, 230},
    {0x1E947u, 230},
    {0x1E948u, 230},
    {0x1E949u, 230},
    {0x1E94Au, 7},
};
const std::size_t kCccCount = 872;

const PairEntry kComp[] = {
    {0x3C00000338ull, 0x226Eu},
    {0x3D00000338ull, 0x2260u},
    {0x3E00000338ull, 0x226Fu},
    {0x4100000300ull, 0xC0u},
    {0x4100000301ull, 0xC1u},
    {0x4100000302ull, 0xC2u},
    {0x4100000303ull, 0xC3u},
    {0x4100000304ull, 0x100u},
    {0x4100000306ull, 0x102u},
    {0x4100000307ull, 0x226u},
    {0x4100000308ull, 0xC4u},
    {0x4100000309ull, 0x1EA2u},
    {0x410000030Aull, 0xC5u},
    {0x410000030Cull, 0x1CDu},
    {0x410000030Full, 0x200u},
    {0x4100000311ull, 0x202u},
    {0x4100000323ull, 0x1EA0u},
    {0x4100000325ull, 0x1E00u},
    {0x4100000328ull, 0x104u},
    {0x4200000307ull, 0x1E02u},
    {0x4200000323ull, 0x1E04u},
    {0x4200000331ull, 0x1E06u},
    {0x4300000301ull, 0x106u},
    {0x4300000302ull, 0x108u},
    {0x4300000307ull, 0x10Au},
    {0x430000030Cull, 0x10Cu},
    {0x4300000327ull, 0xC7u},
    {0x4400000307ull, 0x1E0Au},
    {0x440000030Cull, 0x10Eu},
    {0x4400000323ull, 0x1E0Cu},
    {0x4400000327ull, 0x1E10u},
    {0x440000032Dull, 0x1E12u},
    {0x4400000331ull, 0x1E0Eu},
    {0x4500000300ull, 0xC8u},
    {0x4500000301ull, 0xC9u},
    {0x4500000302ull, 0xCAu},
    {0x4500000303ull, 0x1EBCu},
    {0x4500000304ull, 0x112u},
    {0x4500000306ull, 0x114u},
    {0x4500000307ull, 0x116u},
    {0x4500000308ull, 0xCBu},
    {0x4500000309ull, 0x1EBAu},
    {0x450000030Cull, 0x11Au},
    {0x450000030Full, 0x204u},
    {0x4500000311ull, 0x206u},
    {0x4500000323ull, 0x1EB8u},
    {0x4500000327ull, 0x228u},
    {0x4500000328ull, 0x118u},
    {0x450000032Dull, 0x1E18u},
    {0x4500000330ull, 0x1E1Au},
    {0x4600000307ull, 0x1E1Eu},
    {0x4700000301ull, 0x1F4u},
    {0x4700000302ull, 0x11Cu},
    {0x4700000304ull, 0x1E20u},
    {0x4700000306ull, 0x11Eu},
    {0x4700000307ull, 0x120u},
    {0x470000030Cull, 0x1E6u},
    {0x4700000327ull, 0x122u},
    {0x4800000302ull, 0x124u},
    {0x4800000307ull, 0x1E22u},
    {0x4800000308ull, 0x1E26u},
    {0x480000030Cull, 0x21Eu},
    {0x4800000323ull, 0x1E24u},
    {0x4800000327ull, 0x1E28u},
    {0x480000032Eull, 0x1E2Au},
    {0x4900000300ull, 0xCCu},
    {0x4900000301ull, 0xCDu},
    {0x4900000302ull, 0xCEu},
    {0x4900000303ull, 0x128u},
    {0x4900000304ull, 0x12Au},
    {0x4900000306ull, 0x12Cu},
    {0x4900000307ull, 0x130u},
    {0x4900000308ull, 0xCFu},
    {0x4900000309ull, 0x1EC8u},
    {0x490000030Cull, 0x1CFu},
    {0x490000030Full, 0x208u},
    {0x4900000311ull, 0x20Au},
    {0x4900000323ull, 0x1ECAu},
    {0x4900000328ull, 0x12Eu},
    {0x4900000330ull, 0x1E2Cu},
    {0x4A00000302ull, 0x134u},
    {0x4B00000301ull, 0x1E30u},
    {0x4B0000030Cull, 0x1E8u},
    {0x4B00000323ull, 0x1E32u},
    {0x4B00000327ull, 0x136u},
    {0x4B00000331ull, 0x1E34u},
    {0x4C00000301ull, 0x139u},
    {0x4C0000030Cull, 0x13Du},
    {0x4C00000323ull, 0x1E36u},
    {0x4C00000327ull, 0x13Bu},
    {0x4C0000032Dull, 0x1E3Cu},
    {0x4C00000331ull, 0x1E3Au},
    {0x4D00000301ull, 0x1E3Eu},
    {0x4D00000307ull, 0x1E40u},
    {0x4D00000323ull, 0x1E42u},
    {0x4E00000300ull, 0x1F8u},
    {0x4E00000301ull, 0x143u},
    {0x4E00000303ull, 0xD1u},
    {0x4E00000307ull, 0x1E44u},
    {0x4E0000030Cull, 0x147u},
    {0x4E00000323ull, 0x1E46u},
    {0x4E00000327ull, 0x145u},
    {0x4E0000032Dull, 0x1E4Au},
    {0x4E00000331ull, 0x1E48u},
    {0x4F00000300ull, 0xD2u},
    {0x4F00000301ull, 0xD3u},
    {0x4F00000302ull, 0xD4u},
    {0x4F00000303ull, 0xD5u},
    {0x4F00000304ull, 0x14Cu},
    {0x4F00000306ull, 0x14Eu},
    {0x4F00000307ull, 0x22Eu},
    {0x4F00000308ull, 0xD6u},
    {0x4F00000309ull, 0x1ECEu},
    {0x4F0000030Bull, 0x150u},
    {0x4F0000030Cull, 0x1D1u},
    {0x4F0000030Full, 0x20Cu},
    {0x4F00000311ull, 0x20Eu},
    {0x4F0000031Bull, 0x1A0u},
    {0x4F00000323ull, 0x1ECCu},
    {0x4F00000328ull, 0x1EAu},
    {0x5000000301ull, 0x1E54u},
    {0x5000000307ull, 0x1E56u},
    {0x5200000301ull, 0x154u},
    {0x5200000307ull, 0x1E58u},
    {0x520000030Cull, 0x158u},
    {0x520000030Full, 0x210u},
    {0x5200000311ull, 0x212u},
    {0x5200000323ull, 0x1E5Au},
    {0x5200000327ull, 0x156u},
    {0x5200000331ull, 0x1E5Eu},
    {0x5300000301ull, 0x15Au},
    {0x5300000302ull, 0x15Cu},
    {0x5300000307ull, 0x1E60u},
    {0x530000030Cull, 0x160u},
    {0x5300000323ull, 0x1E62u},
    {0x5300000326ull, 0x218u},
    {0x5300000327ull, 0x15Eu},
    {0x5400000307ull, 0x1E6Au},
    {0x540000030Cull, 0x164u},
    {0x5400000323ull, 0x1E6Cu},
    {0x5400000326ull, 0x21Au},
    {0x5400000327ull, 0x162u},
    {0x540000032Dull, 0x1E70u},
    {0x5400000331ull, 0x1E6Eu},
    {0x5500000300ull, 0xD9u},
    {0x5500000301ull, 0xDAu},
    {0x5500000302ull, 0xDBu},
    {0x5500000303ull, 0x168u},
    {0x5500000304ull, 0x16Au},
    {0x5500000306ull, 0x16Cu},
    {0x5500000308ull, 0xDCu},
    {0x5500000309ull, 0x1EE6u},
    {0x550000030Aull, 0x16Eu},
    {0x550000030Bull, 0x170u},
    {0x550000030Cull, 0x1D3u},
    {0x550000030Full, 0x214u},
    {0x5500000311ull, 0x216u},
    {0x550000031Bull, 0x1AFu},
    {0x5500000323ull, 0x1EE4u},
    {0x5500000324ull, 0x1E72u},
    {0x5500000328ull, 0x172u},
    {0x550000032Dull, 0x1E76u},
    {0x5500000330ull, 0x1E74u},
    {0x5600000303ull, 0x1E7Cu},
    {0x5600000323ull, 0x1E7Eu},
    {0x5700000300ull, 0x1E80u},
    {0x5700000301ull, 0x1E82u},
    {0x5700000302ull, 0x174u},
    {0x5700000307ull, 0x1E86u},
    {0x5700000308ull, 0x1E84u},
    {0x5700000323ull, 0x1E88u},
    {0x5800000307ull, 0x1E8Au},
    {0x5800000308ull, 0x1E8Cu},
    {0x5900000300ull, 0x1EF2u},
    {0x5900000301ull, 0xDDu},
    {0x5900000302ull, 0x176u},
    {0x5900000303ull, 0x1EF8u},
    {0x5900000304ull, 0x232u},
    {0x5900000307ull, 0x1E8Eu},
    {0x5900000308ull, 0x178u},
    {0x5900000309ull, 0x1EF6u},
    {0x5900000323ull, 0x1EF4u},
    {0x5A00000301ull, 0x179u},
    {0x5A00000302ull, 0x1E90u},
    {0x5A00000307ull, 0x17Bu},
    {0x5A0000030Cull, 0x17Du},
    {0x5A00000323ull, 0x1E92u},
    {0x5A00000331ull, 0x1E94u},
    {0x6100000300ull, 0xE0u},
    {0x6100000301ull, 0xE1u},
    {0x6100000302ull, 0xE2u},
    {0x6100000303ull, 0xE3u},
    {0x6100000304ull, 0x101u},
    {0x6100000306ull, 0x103u},
    {0x6100000307ull, 0x227u},
    {0x6100000308ull, 0xE4u},
    {0x6100000309ull, 0x1EA3u},
    {0x610000030Aull, 0xE5u},
    {0x610000030Cull, 0x1CEu},
    {0x610000030Full, 0x201u},
    {0x6100000311ull, 0x203u},
    {0x6100000323ull, 0x1EA1u},
    {0x6100000325ull, 0x1E01u},
    {0x6100000328ull, 0x105u},
    {0x6200000307ull, 0x1E03u},
    {0x6200000323ull, 0x1E05u},
    {0x6200000331ull, 0x1E07u},
    {0x6300000301ull, 0x107u},
    {0x6300000302ull, 0x109u},
    {0x6300000307ull, 0x10Bu},
    {0x630000030Cull, 0x10Du},
    {0x6300000327ull, 0xE7u},
    {0x6400000307ull, 0x1E0Bu},
    {0x640000030Cull, 0x10Fu},
    {0x6400000323ull, 0x1E0Du},
    {0x6400000327ull, 0x1E11u},
    {0x640000032Dull, 0x1E13u},
    {0x6400000331ull, 0x1E0Fu},
    {0x6500000300ull, 0xE8u},
    {0x6500000301ull, 0xE9u},
    {0x6500000302ull, 0xEAu},
    {0x6500000303ull, 0x1EBDu},
    {0x6500000304ull, 0x113u},
    {0x6500000306ull, 0x115u},
    {0x6500000307ull, 0x117u},
    {0x6500000308ull, 0xEBu},
    {0x6500000309ull, 0x1EBBu},
    {0x650000030Cull, 0x11Bu},
    {0x650000030Full, 0x205u},
    {0x6500000311ull, 0x207u},
    {0x6500000323ull, 0x1EB9u},
    {0x6500000327ull, 0x229u},
    {0x6500000328ull, 0x119u},
    {0x650000032Dull, 0x1E19u},
    {0x6500000330ull, 0x1E1Bu},
    {0x6600000307ull, 0x1E1Fu},
    {0x6700000301ull, 0x1F5u},
    {0x6700000302ull, 0x11Du},
    {0x6700000304ull, 0x1E21u},
    {0x6700000306ull, 0x11Fu},
    {0x6700000307ull, 0x121u},
    {0x670000030Cull, 0x1E7u},
    {0x6700000327ull, 0x123u},
    {0x6800000302ull, 0x125u},
    {0x6800000307ull, 0x1E23u},
    {0x6800000308ull, 0x1E27u},
    {0x680000030Cull, 0x21Fu},
    {0x6800000323ull, 0x1E25u},
    {0x6800000327ull, 0x1E29u},
    {0x680000032Eull, 0x1E2Bu},
    {0x6800000331ull, 0x1E96u},
    {0x6900000300ull, 0xECu},
    {0x6900000301ull, 0xEDu},
    {0x6900000302ull, 0xEEu},
    {0x6900000303ull, 0x129u},
    {0x6900000304ull, 0x12Bu},
    {0x6900000306ull, 0x12Du},
    {0x6900000308ull, 0xEFu},
    {0x6900000309ull, 0x1EC9u},
    {0x690000030Cull, 0x1D0u},
    {0x690000030Full, 0x209u},
    {0x6900000311ull, 0x20Bu},
    {0x6900000323ull, 0x1ECBu},
    {0x6900000328ull, 0x12Fu},
    {0x6900000330ull, 0x1E2Du},
    {0x6A00000302ull, 0x135u},
    {0x6A0000030Cull, 0x1F0u},
    {0x6B00000301ull, 0x1E31u},
    {0x6B0000030Cull, 0x1E9u},
    {0x6B00000323ull, 0x1E33u},
    {0x6B00000327ull, 0x137u},
    {0x6B00000331ull, 0x1E35u},
    {0x6C00000301ull, 0x13Au},
    {0x6C0000030Cull, 0x13Eu},
    {0x6C00000323ull, 0x1E37u},
    {0x6C00000327ull, 0x13Cu},
    {0x6C0000032Dull, 0x1E3Du},
    {0x6C00000331ull, 0x1E3Bu},
    {0x6D00000301ull, 0x1E3Fu},
    {0x6D00000307ull, 0x1E41u},
    {0x6D00000323ull, 0x1E43u},
    {0x6E00000300ull, 0x1F9u},
    {0x6E00000301ull, 0x144u},
    {0x6E00000303ull, 0xF1u},
    {0x6E00000307ull, 0x1E45u},
    {0x6E0000030Cull, 0x148u},
    {0x6E00000323ull, 0x1E47u},
    {0x6E00000327ull, 0x146u},
    {0x6E0000032Dull, 0x1E4Bu},
    {0x6E00000331ull, 0x1E49u},
    {0x6F00000300ull, 0xF2u},
    {0x6F00000301ull, 0xF3u},
    {0x6F00000302ull, 0xF4u},
    {0x6F00000303ull, 0xF5u},
    {0x6F00000304ull, 0x14Du},
    {0x6F00000306ull, 0x14Fu},
    {0x6F00000307ull, 0x22Fu},
    {0x6F00000308ull, 0xF6u},
    {0x6F00000309ull, 0x1ECFu},
    {0x6F0000030Bull, 0x151u},
    {0x6F0000030Cull, 0x1D2u},
    {0x6F0000030Full, 0x20Du},
    {0x6F00000311ull, 0x20Fu},
    {0x6F0000031Bull, 0x1A1u},
    {0x6F00000323ull, 0x1ECDu},
    {0x6F00000328ull, 0x1EBu},
    {0x7000000301ull, 0x1E55u},
    {0x7000000307ull, 0x1E57u},
    {0x7200000301ull, 0x155u},
    {0x7200000307ull, 0x1E59u},
    {0x720000030Cull, 0x159u},
    {0x720000030Full, 0x211u},
    {0x7200000311ull, 0x213u},
    {0x7200000323ull, 0x1E5Bu},
    {0x7200000327ull, 0x157u},
    {0x7200000331ull, 0x1E5Fu},
    {0x7300000301ull, 0x15Bu},
    {0x7300000302ull, 0x15Du},
    {0x7300000307ull, 0x1E61u},
    {0x730000030Cull, 0x161u},
    {0x7300000323ull, 0x1E63u},
    {0x7300000326ull, 0x219u},
    {0x7300000327ull, 0x15Fu},
    {0x7400000307ull, 0x1E6Bu},
    {0x7400000308ull, 0x1E97u},
    {0x740000030Cull, 0x165u},
    {0x7400000323ull, 0x1E6Du},
    {0x7400000326ull, 0x21Bu},
    {0x7400000327ull, 0x163u},
    {0x740000032Dull, 0x1E71u},
    {0x7400000331ull, 0x1E6Fu},
    {0x7500000300ull, 0xF9u},
    {0x7500000301ull, 0xFAu},
    {0x7500000302ull, 0xFBu},
    {0x7500000303ull, 0x169u},
    {0x7500000304ull, 0x16Bu},
    {0x7500000306ull, 0x16Du},
    {0x7500000308ull, 0xFCu},
    {0x7500000309ull, 0x1EE7u},
    {0x750000030Aull, 0x16Fu},
    {0x750000030Bull, 0x171u},
    {0x750000030Cull, 0x1D4u},
    {0x750000030Full, 0x215u},
    {0x7500000311ull, 0x217u},
    {0x750000031Bull, 0x1B0u},
    {0x7500000323ull, 0x1EE5u},
    {0x7500000324ull, 0x1E73u},
    {0x7500000328ull, 0x173u},
    {0x750000032Dull, 0x1E77u},
    {0x7500000330ull, 0x1E75u},
    {0x7600000303ull, 0x1E7Du},
    {0x7600000323ull, 0x1E7Fu},
    {0x7700000300ull, 0x1E81u},
    {0x7700000301ull, 0x1E83u},
    {0x7700000302ull, 0x175u},
    {0x7700000307ull, 0x1E87u},
    {0x7700000308ull, 0x1E85u},
    {0x770000030Aull, 0x1E98u},
    {0x7700000323ull, 0x1E89u},
    {0x7800000307ull, 0x1E8Bu},
    {0x7800000308ull, 0x1E8Du},
    {0x7900000300ull, 0x1EF3u},
    {0x7900000301ull, 0xFDu},
    {0x7900000302ull, 0x177u},
    {0x7900000303ull, 0x1EF9u},
    {0x7900000304ull, 0x233u},
    {0x7900000307ull, 0x1E8Fu},
    {0x7900000308ull, 0xFFu},
    {0x7900000309ull, 0x1EF7u},
    {0x790000030Aull, 0x1E99u},
    {0x7900000323ull, 0x1EF5u},
    {0x7A00000301ull, 0x17Au},
    {0x7A00000302ull, 0x1E91u},
    {0x7A00000307ull, 0x17Cu},
    {0x7A0000030Cull, 0x17Eu},
    {0x7A00000323ull, 0x1E93u},
    {0x7A00000331ull, 0x1E95u},
    {0xA800000300ull, 0x1FEDu},
    {0xA800000301ull, 0x385u},
    {0xA800000342ull, 0x1FC1u},
    {0xC200000300ull, 0x1EA6u},
    {0xC200000301ull, 0x1EA4u},
    {0xC200000303ull, 0x1EAAu},
    {0xC200000309ull, 0x1EA8u},
    {0xC400000304ull, 0x1DEu},
    {0xC500000301ull, 0x1FAu},
    {0xC600000301ull, 0x1FCu},
    {0xC600000304ull, 0x1E2u},
    {0xC700000301ull, 0x1E08u},
    {0xCA00000300ull, 0x1EC0u},
    {0xCA00000301ull, 0x1EBEu},
    {0xCA00000303ull, 0x1EC4u},
    {0xCA00000309ull, 0x1EC2u},
    {0xCF00000301ull, 0x1E2Eu},
    {0xD400000300ull, 0x1ED2u},
    {0xD400000301ull, 0x1ED0u},
    {0xD400000303ull, 0x1ED6u},
    {0xD400000309ull, 0x1ED4u},
    {0xD500000301ull, 0x1E4Cu},
    {0xD500000304ull, 0x22Cu},
    {0xD500000308ull, 0x1E4Eu},
    {0xD600000304ull, 0x22Au},
    {0xD800000301ull, 0x1FEu},
    {0xDC00000300ull, 0x1DBu},
    {0xDC00000301ull, 0x1D7u},
    {0xDC00000304ull, 0x1D5u},
    {0xDC0000030Cull, 0x1D9u},
    {0xE200000300ull, 0x1EA7u},
    {0xE200000301ull, 0x1EA5u},
    {0xE200000303ull, 0x1EABu},
    {0xE200000309ull, 0x1EA9u},
    {0xE400000304ull, 0x1DFu},
    {0xE500000301ull, 0x1FBu},
    {0xE600000301ull, 0x1FDu},
    {0xE600000304ull, 0x1E3u},
    {0xE700000301ull, 0x1E09u},
    {0xEA00000300ull, 0x1EC1u},
    {0xEA00000301ull, 0x1EBFu},
    {0xEA00000303ull, 0x1EC5u},
    {0xEA00000309ull, 0x1EC3u},
    {0xEF00000301ull, 0x1E2Fu},
    {0xF400000300ull, 0x1ED3u},
    {0xF400000301ull, 0x1ED1u},
    {0xF400000303ull, 0x1ED7u},
    {0xF400000309ull, 0x1ED5u},
    {0xF500000301ull, 0x1E4Du},
    {0xF500000304ull, 0x22Du},
    {0xF500000308ull, 0x1E4Fu},
    {0xF600000304ull, 0x22Bu},
    {0xF800000301ull, 0x1FFu},
    {0xFC00000300ull, 0x1DCu},
    {0xFC00000301ull, 0x1D8u},
    {0xFC00000304ull, 0x1D6u},
    {0xFC0000030Cull, 0x1DAu},
    {0x10200000300ull, 0x1EB0u},
    {0x10200000301ull, 0x1EAEu},
    {0x10200000303ull, 0x1EB4u},
    {0x10200000309ull, 0x1EB2u},
    {0x10300000300ull, 0x1EB1u},
    {0x10300000301ull, 0x1EAFu},
    {0x10300000303ull, 0x1EB5u},
    {0x10300000309ull, 0x1EB3u},
    {0x11200000300ull, 0x1E14u},
    {0x11200000301ull, 0x1E16u},
    {0x11300000300ull, 0x1E15u},
    {0x11300000301ull, 0x1E17u},
    {0x14C00000300ull, 0x1E50u},
    {0x14C00000301ull, 0x1E52u},
    {0x14D00000300ull, 0x1E51u},
    {0x14D00000301ull, 0x1E53u},
    {0x15A00000307ull, 0x1E64u},
    {0x15B00000307ull, 0x1E65u},
    {0x16000000307ull, 0x1E66u},
    {0x16100000307ull, 0x1E67u},
    {0x16800000301ull, 0x1E78u},
    {0x16900000301ull, 0x1E79u},
    {0x16A00000308ull, 0x1E7Au},
    {0x16B00000308ull, 0x1E7Bu},
    {0x17F00000307ull, 0x1E9Bu},
    {0x1A000000300ull, 0x1EDCu},
    {0x1A000000301ull, 0x1EDAu},
    {0x1A000000303ull, 0x1EE0u},
    {0x1A000000309ull, 0x1EDEu},
    {0x1A000000323ull, 0x1EE2u},
    {0x1A100000300ull, 0x1EDDu},
    {0x1A100000301ull, 0x1EDBu},
    {0x1A100000303ull, 0x1EE1u},
    {0x1A100000309ull, 0x1EDFu},
    {0x1A100000323ull, 0x1EE3u},
    {0x1AF00000300ull, 0x1EEAu},
    {0x1AF00000301ull, 0x1EE8u},
    {0x1AF00000303ull, 0x1EEEu},
    {0x1AF00000309ull, 0x1EECu},
    {0x1AF00000323ull, 0x1EF0u},
    {0x1B000000300ull, 0x1EEBu},
    {0x1B000000301ull, 0x1EE9u},
    {0x1B000000303ull, 0x1EEFu},
    {0x1B000000309ull, 0x1EEDu},
    {0x1B000000323ull, 0x1EF1u},
    {0x1B70000030Cull, 0x1EEu},
    {0x1EA00000304ull, 0x1ECu},
    {0x1EB00000304ull, 0x1EDu},
    {0x22600000304ull, 0x1E0u},
    {0x22700000304ull, 0x1E1u},
    {0x22800000306ull, 0x1E1Cu},
    {0x22900000306ull, 0x1E1Du},
    {0x22E00000304ull, 0x230u},
    {0x22F00000304ull, 0x231u},
    {0x2920000030Cull, 0x1EFu},
    {0x39100000300ull, 0x1FBAu},
    {0x39100000301ull, 0x386u},
    {0x39100000304ull, 0x1FB9u},
    {0x39100000306ull, 0x1FB8u},
    {0x39100000313ull, 0x1F08u},
    {0x39100000314ull, 0x1F09u},
    {0x39100000345ull, 0x1FBCu},
    {0x39500000300ull, 0x1FC8u},
    {0x39500000301ull, 0x388u},
    {0x39500000313ull, 0x1F18u},
    {0x39500000314ull, 0x1F19u},
    {0x39700000300ull, 0x1FCAu},
    {0x39700000301ull, 0x389u},
    {0x39700000313ull, 0x1F28u},
    {0x39700000314ull, 0x1F29u},
    {0x39700000345ull, 0x1FCCu},
    {0x39900000300ull, 0x1FDAu},
    {0x39900000301ull, 0x38Au},
    {0x39900000304ull, 0x1FD9u},
    {0x39900000306ull, 0x1FD8u},
    {0x39900000308ull, 0x3AAu},
    {0x39900000313ull, 0x1F38u},
    {0x39900000314ull, 0x1F39u},
    {0x39F00000300ull, 0x1FF8u},
    {0x39F00000301ull, 0x38Cu},
    {0x39F00000313ull, 0x1F48u},
    {0x39F00000314ull, 0x1F49u},
    {0x3A100000314ull, 0x1FECu},
    {0x3A500000300ull, 0x1FEAu},
    {0x3A500000301ull, 0x38Eu},
    {0x3A500000304ull, 0x1FE9u},
    {0x3A500000306ull, 0x1FE8u},
    {0x3A500000308ull, 0x3ABu},
    {0x3A500000314ull, 0x1F59u},
    {0x3A900000300ull, 0x1FFAu},
    {0x3A900000301ull, 0x38Fu},
    {0x3A900000313ull, 0x1F68u},
    {0x3A900000314ull, 0x1F69u},
    {0x3A900000345ull, 0x1FFCu},
    {0x3AC00000345ull, 0x1FB4u},
    {0x3AE00000345ull, 0x1FC4u},
    {0x3B100000300ull, 0x1F70u},
    {0x3B100000301ull, 0x3ACu},
    {0x3B100000304ull, 0x1FB1u},
    {0x3B100000306ull, 0x1FB0u},
    {0x3B100000313ull, 0x1F00u},
    {0x3B100000314ull, 0x1F01u},
    {0x3B100000342ull, 0x1FB6u},
    {0x3B100000345ull, 0x1FB3u},
    {0x3B500000300ull, 0x1F72u},
    {0x3B500000301ull, 0x3ADu},
    {0x3B500000313ull, 0x1F10u},
    {0x3B500000314ull, 0x1F11u},
    {0x3B700000300ull, 0x1F74u},
    {0x3B700000301ull, 0x3AEu},
    {0x3B700000313ull, 0x1F20u},
    {0x3B700000314ull, 0x1F21u},
    {0x3B700000342ull, 0x1FC6u},
    {0x3B700000345ull, 0x1FC3u},
    {0x3B900000300ull, 0x1F76u},
    {0x3B900000301ull, 0x3AFu},
    {0x3B900000304ull, 0x1FD1u},
    {0x3B900000306ull, 0x1FD0u},
    {0x3B900000308ull, 0x3CAu},
    {0x3B900000313ull, 0x1F30u},
    {0x3B900000314ull, 0x1F31u},
    {0x3B900000342ull, 0x1FD6u},
    {0x3BF00000300ull, 0x1F78u},
    {0x3BF00000301ull, 0x3CCu},
    {0x3BF00000313ull, 0x1F40u},
    {0x3BF00000314ull, 0x1F41u},
    {0x3C100000313ull, 0x1FE4u},
    {0x3C100000314ull, 0x1FE5u},
    {0x3C500000300ull, 0x1F7Au},
    {0x3C500000301ull, 0x3CDu},
    {0x3C500000304ull, 0x1FE1u},
    {0x3C500000306ull, 0x1FE0u},
    {0x3C500000308ull, 0x3CBu},
    {0x3C500000313ull, 0x1F50u},
    {0x3C500000314ull, 0x1F51u},
    {0x3C500000342ull, 0x1FE6u},
    {0x3C900000300ull, 0x1F7Cu},
    {0x3C900000301ull, 0x3CEu},
    {0x3C900000313ull, 0x1F60u},
    {0x3C900000314ull, 0x1F61u},
    {0x3C900000342ull, 0x1FF6u},
    {0x3C900000345ull, 0x1FF3u},
    {0x3CA00000300ull, 0x1FD2u},
    {0x3CA00000301ull, 0x390u},
    {0x3CA00000342ull, 0x1FD7u},
    {0x3CB00000300ull, 0x1FE2u},
    {0x3CB00000301ull, 0x3B0u},
    {0x3CB00000342ull, 0x1FE7u},
    {0x3CE00000345ull, 0x1FF4u},
    {0x3D200000301ull, 0x3D3u},
    {0x3D200000308ull, 0x3D4u},
    {0x40600000308ull, 0x407u},
    {0x41000000306ull, 0x4D0u},
    {0x41000000308ull, 0x4D2u},
    {0x41300000301ull, 0x403u},
    {0x41500000300ull, 0x400u},
    {0x41500000306ull, 0x4D6u},
    {0x41500000308ull, 0x401u},
    {0x41600000306ull, 0x4C1u},
    {0x41600000308ull, 0x4DCu},
    {0x41700000308ull, 0x4DEu},
    {0x41800000300ull, 0x40Du},
    {0x41800000304ull, 0x4E2u},
    {0x41800000306ull, 0x419u},
    {0x41800000308ull, 0x4E4u},
    {0x41A00000301ull, 0x40Cu},
    {0x41E00000308ull, 0x4E6u},
    {0x42300000304ull, 0x4EEu},
    {0x42300000306ull, 0x40Eu},
    {0x42300000308ull, 0x4F0u},
    {0x4230000030Bull, 0x4F2u},
    {0x42700000308ull, 0x4F4u},
    {0x42B00000308ull, 0x4F8u},
    {0x42D00000308ull, 0x4ECu},
    {0x43000000306ull, 0x4D1u},
    {0x43000000308ull, 0x4D3u},
    {0x43300000301ull, 0x453u},
    {0x43500000300ull, 0x450u},
    {0x43500000306ull, 0x4D7u},
    {0x43500000308ull, 0x451u},
    {0x43600000306ull, 0x4C2u},
    {0x43600000308ull, 0x4DDu},
    {0x43700000308ull, 0x4DFu},
    {0x43800000300ull, 0x45Du},
    {0x43800000304ull, 0x4E3u},
    {0x43800000306ull, 0x439u},
    {0x43800000308ull, 0x4E5u},
    {0x43A00000301ull, 0x45Cu},
    {0x43E00000308ull, 0x4E7u},
    {0x44300000304ull, 0x4EFu},
    {0x44300000306ull, 0x45Eu},
    {0x44300000308ull, 0x4F1u},
    {0x4430000030Bull, 0x4F3u},
    {0x44700000308ull, 0x4F5u},
    {0x44B00000308ull, 0x4F9u},
    {0x44D00000308ull, 0x4EDu},
    {0x45600000308ull, 0x457u},
    {0x4740000030Full, 0x476u},
    {0x4750000030Full, 0x477u},
    {0x4D800000308ull, 0x4DAu},
    {0x4D900000308ull, 0x4DBu},
    {0x4E800000308ull, 0x4EAu},
    {0x4E900000308ull, 0x4EBu},
    {0x62700000653ull, 0x622u},
    {0x62700000654ull, 0x623u},
    {0x62700000655ull, 0x625u},
    {0x64800000654ull, 0x624u},
    {0x64A00000654ull, 0x626u},
    {0x6C100000654ull, 0x6C2u},
    {0x6D200000654ull, 0x6D3u},
    {0x6D500000654ull, 0x6C0u},
    {0x9280000093Cull, 0x929u},
    {0x9300000093Cull, 0x931u},
    {0x9330000093Cull, 0x934u},
    {0x9C7000009BEull, 0x9CBu},
    {0x9C7000009D7ull, 0x9CCu},
    {0xB4700000B3Eull, 0xB4Bu},
    {0xB4700000B56ull, 0xB48u},
    {0xB4700000B57ull, 0xB4Cu},
    {0xB9200000BD7ull, 0xB94u},
    {0xBC600000BBEull, 0xBCAu},
    {0xBC600000BD7ull, 0xBCCu},
    {0xBC700000BBEull, 0xBCBu},
    {0xC4600000C56ull, 0xC48u},
    {0xCBF00000CD5ull, 0xCC0u},
    {0xCC600000CC2ull, 0xCCAu},
    {0xCC600000CD5ull, 0xCC7u},
    {0xCC600000CD6ull, 0xCC8u},
    {0xCCA00000CD5ull, 0xCCBu},
    {0xD4600000D3Eull, 0xD4Au},
    {0xD4600000D57ull, 0xD4Cu},
    {0xD4700000D3Eull, 0xD4Bu},
    {0xDD900000DCAull, 0xDDAu},
    {0xDD900000DCFull, 0xDDCu},
    {0xDD900000DDFull, 0xDDEu},
    {0xDDC00000DCAull, 0xDDDu},
    {0x10250000102Eull, 0x1026u},
    {0x1B0500001B35ull, 0x1B06u},
    {0x1B0700001B35ull, 0x1B08u},
    {0x1B0900001B35ull, 0x1B0Au},
    {0x1B0B00001B35ull, 0x1B0Cu},
    {0x1B0D00001B35ull, 0x1B0Eu},
    {0x1B1100001B35ull, 0x1B12u},
    {0x1B3A00001B35ull, 0x1B3Bu},
    {0x1B3C00001B35ull, 0x1B3Du},
    {0x1B3E00001B35ull, 0x1B40u},
    {0x1B3F00001B35ull, 0x1B41u},
    {0x1B4200001B35ull, 0x1B43u},
    {0x1E3600000304ull, 0x1E38u},
    {0x1E3700000304ull, 0x1E39u},
    {0x1E5A00000304ull, 0x1E5Cu},
    {0x1E5B00000304ull, 0x1E5Du},
    {0x1E6200000307ull, 0x1E68u},
    {0x1E6300000307ull, 0x1E69u},
    {0x1EA000000302ull, 0x1EACu},
    {0x1EA000000306ull, 0x1EB6u},
    {0x1EA100000302ull, 0x1EADu},
    {0x1EA100000306ull, 0x1EB7u},
    {0x1EB800000302ull, 0x1EC6u},
    {0x1EB900000302ull, 0x1EC7u},
    {0x1ECC00000302ull, 0x1ED8u},
    {0x1ECD00000302ull, 0x1ED9u},
    {0x1F0000000300ull, 0x1F02u},
    {0x1F0000000301ull, 0x1F04u},
    {0x1F0000000342ull, 0x1F06u},
    {0x1F0000000345ull, 0x1F80u},
    {0x1F0100000300ull, 0x1F03u},
    {0x1F0100000301ull, 0x1F05u},
    {0x1F0100000342ull, 0x1F07u},
    {0x1F0100000345ull, 0x1F81u},
    {0x1F0200000345ull, 0x1F82u},
    {0x1F0300000345ull, 0x1F83u},
    {0x1F0400000345ull, 0x1F84u},
    {0x1F0500000345ull, 0x1F85u},
    {0x1F0600000345ull, 0x1F86u},
    {0x1F0700000345ull, 0x1F87u},
    {0x1F0800000300ull, 0x1F0Au},
    {0x1F0800000301ull, 0x1F0Cu},
    {0x1F0800000342ull, 0x1F0Eu},
    {0x1F0800000345ull, 0x1F88u},
    {0x1F0900000300ull, 0x1F0Bu},
    {0x1F0900000301ull, 0x1F0Du},
    {0x1F0900000342ull, 0x1F0Fu},
    {0x1F0900000345ull, 0x1F89u},
    {0x1F0A00000345ull, 0x1F8Au},
    {0x1F0B00000345ull, 0x1F8Bu},
    {0x1F0C00000345ull, 0x1F8Cu},
    {0x1F0D00000345ull, 0x1F8Du},
    {0x1F0E00000345ull, 0x1F8Eu},
    {0x1F0F00000345ull, 0x1F8Fu},
    {0x1F1000000300ull, 0x1F12u},
    {0x1F1000000301ull, 0x1F14u},
    {0x1F1100000300ull, 0x1F13u},
    {0x1F1100000301ull, 0x1F15u},
    {0x1F1800000300ull, 0x1F1Au},
    {0x1F1800000301ull, 0x1F1Cu},
    {0x1F1900000300ull, 0x1F1Bu},
    {0x1F1900000301ull, 0x1F1Du},
    {0x1F2000000300ull, 0x1F22u},
    {0x1F2000000301ull, 0x1F24u},
    {0x1F2000000342ull, 0x1F26u},
    {0x1F2000000345ull, 0x1F90u},
    {0x1F2100000300ull, 0x1F23u},
    {0x1F2100000301ull, 0x1F25u},
    {0x1F2100000342ull, 0x1F27u},
    {0x1F2100000345ull, 0x1F91u},
    {0x1F2200000345ull, 0x1F92u},
    {0x1F2300000345ull, 0x1F93u},
    {0x1F2400000345ull, 0x1F94u},
    {0x1F2500000345ull, 0x1F95u},
    {0x1F2600000345ull, 0x1F96u},
    {0x1F2700000345ull, 0x1F97u},
    {0x1F2800000300ull, 0x1F2Au},
    {0x1F2800000301ull, 0x1F2Cu},
    {0x1F2800000342ull, 0x1F2Eu},
    {0x1F2800000345ull, 0x1F98u},
    {0x1F2900000300ull, 0x1F2Bu},
    {0x1F2900000301ull, 0x1F2Du},
    {0x1F2900000342ull, 0x1F2Fu},
    {0x1F2900000345ull, 0x1F99u},
    {0x1F2A00000345ull, 0x1F9Au},
    {0x1F2B00000345ull, 0x1F9Bu},
    {0x1F2C00000345ull, 0x1F9Cu},
    {0x1F2D00000345ull, 0x1F9Du},
    {0x1F2E00000345ull, 0x1F9Eu},
    {0x1F2F00000345ull, 0x1F9Fu},
    {0x1F3000000300ull, 0x1F32u},
    {0x1F3000000301ull, 0x1F34u},
    {0x1F3000000342ull, 0x1F36u},
    {0x1F3100000300ull, 0x1F33u},
    {0x1F3100000301ull, 0x1F35u},
    {0x1F3100000342ull, 0x1F37u},
    {0x1F3800000300ull, 0x1F3Au},
    {0x1F3800000301ull, 0x1F3Cu},
    {0x1F3800000342ull, 0x1F3Eu},
    {0x1F3900000300ull, 0x1F3Bu},
    {0x1F3900000301ull, 0x1F3Du},
    {0x1F3900000342ull, 0x1F3Fu},
    {0x1F4000000300ull, 0x1F42u},
    {0x1F4000000301ull, 0x1F44u},
    {0x1F4100000300ull, 0x1F43u},
    {0x1F4100000301ull, 0x1F45u},
    {0x1F4800000300ull, 0x1F4Au},
    {0x1F4800000301ull, 0x1F4Cu},
    {0x1F4900000300ull, 0x1F4Bu},
    {0x1F4900000301ull, 0x1F4Du},
    {0x1F5000000300ull, 0x1F52u},
    {0x1F5000000301ull, 0x1F54u},
    {0x1F5000000342ull, 0x1F56u},
    {0x1F5100000300ull, 0x1F53u},
    {0x1F5100000301ull, 0x1F55u},
    {0x1F5100000342ull, 0x1F57u},
    {0x1F5900000300ull, 0x1F5Bu},
    {0x1F5900000301ull, 0x1F5Du},
    {0x1F5900000342ull, 0x1F5Fu},
    {0x1F6000000300ull, 0x1F62u},
    {0x1F6000000301ull, 0x1F64u},
    {0x1F6000000342ull, 0x1F66u},
    {0x1F6000000345ull, 0x1FA0u},
    {0x1F6100000300ull, 0x1F63u},
    {0x1F6100000301ull, 0x1F65u},
    {0x1F6100000342ull, 0x1F67u},
    {0x1F6100000345ull, 0x1FA1u},
    {0x1F6200000345ull, 0x1FA2u},
    {0x1F6300000345ull, 0x1FA3u},
    {0x1F6400000345ull, 0x1FA4u},
    {0x1F6500000345ull, 0x1FA5u},
    {0x1F6600000345ull, 0x1FA6u},
    {0x1F6700000345ull, 0x1FA7u},
    {0x1F6800000300ull, 0x1F6Au},
    {0x1F6800000301ull, 0x1F6Cu},
    {0x1F6800000342ull, 0x1F6Eu},
    {0x1F6800000345ull, 0x1FA8u},
    {0x1F6900000300ull, 0x1F6Bu},
    {0x1F6900000301ull, 0x1F6Du},
    {0x1F6900000342ull, 0x1F6Fu},
    {0x1F6900000345ull, 0x1FA9u},
    {0x1F6A00000345ull, 0x1FAAu},
    {0x1F6B00000345ull, 0x1FABu},
    {0x1F6C00000345ull, 0x1FACu},
    {0x1F6D00000345ull, 0x1FADu},
    {0x1F6E00000345ull, 0x1FAEu},
    {0x1F6F00000345ull, 0x1FAFu},
    {0x1F7000000345ull, 0x1FB2u},
    {0x1F7400000345ull, 0x1FC2u},
    {0x1F7C00000345ull, 0x1FF2u},
    {0x1FB600000345ull, 0x1FB7u},
    {0x1FBF00000300ull, 0x1FCDu},
    {0x1FBF00000301ull, 0x1FCEu},
    {0x1FBF00000342ull, 0x1FCFu},
    {0x1FC600000345ull, 0x1FC7u},
    {0x1FF600000345ull, 0x1FF7u},
    {0x1FFE00000300ull, 0x1FDDu},
    {0x1FFE00000301ull, 0x1FDEu},
    {0x1FFE00000342ull, 0x1FDFu},
    {0x219000000338ull, 0x219Au},
    {0x219200000338ull, 0x219Bu},
    {0x219400000338ull, 0x21AEu},
    {0x21D000000338ull, 0x21CDu},
    {0x21D200000338ull, 0x21CFu},
    {0x21D400000338ull, 0x21CEu},
    {0x220300000338ull, 0x2204u},
    {0x220800000338ull, 0x2209u},
    {0x220B00000338ull, 0x220Cu},
    {0x222300000338ull, 0x2224u},
    {0x222500000338ull, 0x2226u},
    {0x223C00000338ull, 0x2241u},
    {0x224300000338ull, 0x2244u},
    {0x224500000338ull, 0x2247u},
    {0x224800000338ull, 0x2249u},
    {0x224D00000338ull, 0x226Du},
    {0x226100000338ull, 0x2262u},
    {0x226400000338ull, 0x2270u},
    {0x226500000338ull, 0x2271u},
    {0x227200000338ull, 0x2274u},
    {0x227300000338ull, 0x2275u},
    {0x227600000338ull, 0x2278u},
    {0x227700000338ull, 0x2279u},
    {0x227A00000338ull, 0x2280u},
    {0x227B00000338ull, 0x2281u},
    {0x227C00000338ull, 0x22E0u},
    {0x227D00000338ull, 0x22E1u},
    {0x228200000338ull, 0x2284u},
    {0x228300000338ull, 0x2285u},
    {0x228600000338ull, 0x2288u},
    {0x228700000338ull, 0x2289u},
    {0x229100000338ull, 0x22E2u},
    {0x229200000338ull, 0x22E3u},
    {0x22A200000338ull, 0x22ACu},
    {0x22A800000338ull, 0x22ADu},
    {0x22A900000338ull, 0x22AEu},
    {0x22AB00000338ull, 0x22AFu},
    {0x22B200000338ull, 0x22EAu},
    {0x22B300000338ull, 0x22EBu},
    {0x22B400000338ull, 0x22ECu},
    {0x22B500000338ull, 0x22EDu},
    {0x304600003099ull, 0x3094u},
    {0x304B00003099ull, 0x304Cu},
    {0x304D00003099ull, 0x304Eu},
    {0x304F00003099ull, 0x3050u},
    {0x305100003099ull, 0x3052u},
    {0x305300003099ull, 0x3054u},
    {0x305500003099ull, 0x3056u},
    {0x305700003099ull, 0x3058u},
    {0x305900003099ull, 0x305Au},
    {0x305B00003099ull, 0x305Cu},
    {0x305D00003099ull, 0x305Eu},
    {0x305F00003099ull, 0x3060u},
    {0x306100003099ull, 0x3062u},
    {0x306400003099ull, 0x3065u},
    {0x306600003099ull, 0x3067u},
    {0x306800003099ull, 0x3069u},
    {0x306F00003099ull, 0x3070u},
    {0x306F0000309Aull, 0x3071u},
    {0x307200003099ull, 0x3073u},
    {0x30720000309Aull, 0x3074u},
    {0x307500003099ull, 0x3076u},
    {0x30750000309Aull, 0x3077u},
    {0x307800003099ull, 0x3079u},
    {0x30780000309Aull, 0x307Au},
    {0x307B00003099ull, 0x307Cu},
    {0x307B0000309Aull, 0x307Du},
    {0x309D00003099ull, 0x309Eu},
    {0x30A600003099ull, 0x30F4u},
    {0x30AB00003099ull, 0x30ACu},
    {0x30AD00003099ull, 0x30AEu},
    {0x30AF00003099ull, 0x30B0u},
    {0x30B100003099ull, 0x30B2u},
    {0x30B300003099ull, 0x30B4u},
    {0x30B500003099ull, 0x30B6u},
    {0x30B700003099ull, 0x30B8u},
    {0x30B900003099ull, 0x30BAu},
    {0x30BB00003099ull, 0x30BCu},
    {0x30BD00003099ull, 0x30BEu},
    {0x30BF00003099ull, 0x30C0u},
    {0x30C100003099ull, 0x30C2u},
    {0x30C400003099ull, 0x30C5u},
    {0x30C600003099ull, 0x30C7u},
    {0x30C800003099ull, 0x30C9u},
    {0x30CF00003099ull, 0x30D0u},
    {0x30CF0000309Aull, 0x30D1u},
    {0x30D200003099ull, 0x30D3u},
    {0x30D20000309Aull, 0x30D4u},
    {0x30D500003099ull, 0x30D6u},
    {0x30D50000309Aull, 0x30D7u},
    {0x30D800003099ull, 0x30D9u},
    {0x30D80000309Aull, 0x30DAu},
    {0x30DB00003099ull, 0x30DCu},
    {0x30DB0000309Aull, 0x30DDu},
    {0x30EF00003099ull, 0x30F7u},
    {0x30F000003099ull, 0x30F8u},
    {0x30F100003099ull, 0x30F9u},
    {0x30F200003099ull, 0x30FAu},
    {0x30FD00003099ull, 0x30FEu},
    {0x11099000110BAull, 0x1109Au},
    {0x1109B000110BAull, 0x1109Cu},
    {0x110A5000110BAull, 0x110ABu},
    {0x1113100011127ull, 0x1112Eu},
    {0x1113200011127ull, 0x1112Fu},
    {0x113470001133Eull, 0x1134Bu},
    {0x1134700011357ull, 0x1134Cu},
    {0x114B9000114B0ull, 0x114BCu},
    {0x114B9000114BAull, 0x114BBu},
    {0x114B9000114BDull, 0x114BEu},
    {0x115B8000115AFull, 0x115BAu},
    {0x115B9000115AFull, 0x115BBu},
    {0x1193500011930ull, 0x11938u},
};
const std::size_t kCompCount = 941;

const Range kWord[] = {
    {0x30u, 0x39u},
    {0x41u, 0x5Au},
    {0x61u, 0x7Au},
    {0xAAu, 0xAAu},
    {0xB2u, 0xB3u},
    {0xB5u, 0xB5u},
    {0xB9u, 0xBAu},
    {0xBCu, 0xBEu},
    {0xC0u, 0xD6u},
    {0xD8u, 0xF6u},
    {0xF8u, 0x2C1u},
    {0x2C6u, 0x2D1u},
    {0x2E0u, 0x2E4u},
    {0x2ECu, 0x2ECu},
    {0x2EEu, 0x2EEu},
    {0x370u, 0x374u},
    {0x376u, 0x377u},
    {0x37Au, 0x37Du},
    {0x37Fu, 0x37Fu},
    {0x386u, 0x386u},
    {0x388u, 0x38Au},
    {0x38Cu, 0x38Cu},
    {0x38Eu, 0x3A1u},
    {0x3A3u, 0x3F5u},
    {0x3F7u, 0x481u},
    {0x48Au, 0x52Fu},
    {0x531u, 0x556u},
    {0x559u, 0x559u},
    {0x560u, 0x588u},
    {0x5D0u, 0x5EAu},
    {0x5EFu, 0x5F2u},
    {0x620u, 0x64Au},
    {0x660u, 0x669u},
    {0x66Eu, 0x66Fu},
    {0x671u, 0x6D3u},
    {0x6D5u, 0x6D5u},
    {0x6E5u, 0x6E6u},
    {0x6EEu, 0x6FCu},
    {0x6FFu, 0x6FFu},
    {0x710u, 0x710u},
    {0x712u, 0x72Fu},
    {0x74Du, 0x7A5u},
    {0x7B1u, 0x7B1u},
    {0x7C0u, 0x7EAu},
    {0x7F4u, 0x7F5u},
    {0x7FAu, 0x7FAu},
    {0x800u, 0x815u},
    {0x81Au, 0x81Au},
    {0x824u, 0x824u},
    {0x828u, 0x828u},
    {0x840u, 0x858u},
    {0x860u, 0x86Au},
    {0x8A0u, 0x8B4u},
    {0x8B6u, 0x8C7u},
    {0x904u, 0x939u},
    {0x93Du, 0x93Du},
    {0x950u, 0x950u},
    {0x958u, 0x961u},
    {0x966u, 0x96Fu},
    {0x971u, 0x980u},
    {0x985u, 0x98Cu},
    {0x98Fu, 0x990u},
    {0x993u, 0x9A8u},
    {0x9AAu, 0x9B0u},
    {0x9B2u, 0x9B2u},
    {0x9B6u, 0x9B9u},
    {0x9BDu, 0x9BDu},
    {0x9CEu, 0x9CEu},
    {0x9DCu, 0x9DDu},
    {0x9DFu, 0x9E1u},
    {0x9E6u, 0x9F1u},
    {0x9F4u, 0x9F9u},
    {0x9FCu, 0x9FCu},
    {0xA05u, 0xA0Au},
    {0xA0Fu, 0xA10u},
    {0xA13u, 0xA28u},
    {0xA2Au, 0xA30u},
    {0xA32u, 0xA33u},
    {0xA35u, 0xA36u},
    {0xA38u, 0xA39u},
    {0xA59u, 0xA5Cu},
    {0xA5Eu, 0xA5Eu},
    {0xA66u, 0xA6Fu},
    {0xA72u, 0xA74u},
    {0xA85u, 0xA8Du},
    {0xA8Fu, 0xA91u},
    {0xA93u, 0xAA8u},
    {0xAAAu, 0xAB0u},
    {0xAB2u, 0xAB3u},
    {0xAB5u, 0xAB9u},
    {0xABDu, 0xABDu},
    {0xAD0u, 0xAD0u},
    {0xAE0u, 0xAE1u},
    {0xAE6u, 0xAEFu},
    {0xAF9u, 0xAF9u},
    {0xB05u, 0xB0Cu},
    {0xB0Fu, 0xB10u},
    {0xB13u, 0xB28u},
    {0xB2Au, 0xB30u},
    {0xB32u, 0xB33u},
    {0xB35u, 0xB39u},
    {0xB3Du, 0xB3Du},
    {0xB5Cu, 0xB5Du},
    {0xB5Fu, 0xB61u},
    {0xB66u, 0xB6Fu},
    {0xB71u, 0xB77u},
    {0xB83u, 0xB83u},
    {0xB85u, 0xB8Au},
    {0xB8Eu, 0xB90u},
    {0xB92u, 0xB95u},
    {0xB99u, 0xB9Au},
    {0xB9Cu, 0xB9Cu},
    {0xB9Eu, 0xB9Fu},
    {0xBA3u, 0xBA4u},
    {0xBA8u, 0xBAAu},
    {0xBAEu, 0xBB9u},
    {0xBD0u, 0xBD0u},
    {0xBE6u, 0xBF2u},
    {0xC05u, 0xC0Cu},
    {0xC0Eu, 0xC10u},
    {0xC12u, 0xC28u},
    {0xC2Au, 0xC39u},
    {0xC3Du, 0xC3Du},
    {0xC58u, 0xC5Au},
    {0xC60u, 0xC61u},
    {0xC66u, 0xC6Fu},
    {0xC78u, 0xC7Eu},
    {0xC80u, 0xC80u},
    {0xC85u, 0xC8Cu},
    {0xC8Eu, 0xC90u},
    {0xC92u, 0xCA8u},
    {0xCAAu, 0xCB3u},
    {0xCB5u, 0xCB9u},
    {0xCBDu, 0xCBDu},
    {0xCDEu, 0xCDEu},
    {0xCE0u, 0xCE1u},
    {0xCE6u, 0xCEFu},
    {0xCF1u, 0xCF2u},
    {0xD04u, 0xD0Cu},
    {0xD0Eu, 0xD10u},
    {0xD12u, 0xD3Au},
    {0xD3Du, 0xD3Du},
    {0xD4Eu, 0xD4Eu},
    {0xD54u, 0xD56u},
    {0xD58u, 0xD61u},
    {0xD66u, 0xD78u},
    {0xD7Au, 0xD7Fu},
    {0xD85u, 0xD96u},
    {0xD9Au, 0xDB1u},
    {0xDB3u, 0xDBBu},
    {0xDBDu, 0xDBDu},
    {0xDC0u, 0xDC6u},
    {0xDE6u, 0xDEFu},
    {0xE01u, 0xE30u},
    {0xE32u, 0xE33u},
    {0xE40u, 0xE46u},
    {0xE50u, 0xE59u},
    {0xE81u, 0xE82u},
    {0xE84u, 0xE84u},
    {0xE86u, 0xE8Au},
    {0xE8Cu, 0xEA3u},
    {0xEA5u, 0xEA5u},
    {0xEA7u, 0xEB0u},
    {0xEB2u, 0xEB3u},
    {0xEBDu, 0xEBDu},
    {0xEC0u, 0xEC4u},
    {0xEC6u, 0xEC6u},
    {0xED0u, 0xED9u},
    {0xEDCu, 0xEDFu},
    {0xF00u, 0xF00u},
    {0xF20u, 0xF33u},
    {0xF40u, 0xF47u},
    {0xF49u, 0xF6Cu},
    {0xF88u, 0xF8Cu},
    {0x1000u, 0x102Au},
    {0x103Fu, 0x1049u},
    {0x1050u, 0x1055u},
    {0x105Au, 0x105Du},
    {0x1061u, 0x1061u},
    {0x1065u, 0x1066u},
    {0x106Eu, 0x1070u},
    {0x1075u, 0x1081u},
    {0x108Eu, 0x108Eu},
    {0x1090u, 0x1099u},
    {0x10A0u, 0x10C5u},
    {0x10C7u, 0x10C7u},
    {0x10CDu, 0x10CDu},
    {0x10D0u, 0x10FAu},
    {0x10FCu, 0x1248u},
    {0x124Au, 0x124Du},
    {0x1250u, 0x1256u},
    {0x1258u, 0x1258u},
    {0x125Au, 0x125Du},
    {0x1260u, 0x1288u},
    {0x128Au, 0x128Du},
    {0x1290u, 0x12B0u},
    {0x12B2u, 0x12B5u},
    {0x12B8u, 0x12BEu},
    {0x12C0u, 0x12C0u},
    {0x12C2u, 0x12C5u},
    {0x12C8u, 0x12D6u},
    {0x12D8u, 0x1310u},
    {0x1312u, 0x1315u},
    {0x1318u, 0x135Au},
    {0x1369u, 0x137Cu},
    {0x1380u, 0x138Fu},
    {0x13A0u, 0x13F5u},
    {0x13F8u, 0x13FDu},
    {0x1401u, 0x166Cu},
    {0x166Fu, 0x167Fu},
    {0x1681u, 0x169Au},
    {0x16A0u, 0x16EAu},
    {0x16EEu, 0x16F8u},
    {0x1700u, 0x170Cu},
    {0x170Eu, 0x1711u},
    {0x1720u, 0x1731u},
    {0x1740u, 0x1751u},
    {0x1760u, 0x176Cu},
    {0x176Eu, 0x1770u},
    {0x1780u, 0x17B3u},
    {0x17D7u, 0x17D7u},
    {0x17DCu, 0x17DCu},
    {0x17E0u, 0x17E9u},
    {0x17F0u, 0x17F9u},
    {0x1810u, 0x1819u},
    {0x1820u, 0x1878u},
    {0x1880u, 0x1884u},
    {0x1887u, 0x18A8u},
    {0x18AAu, 0x18AAu},
    {0x18B0u, 0x18F5u},
    {0x1900u, 0x191Eu},
    {0x1946u, 0x196Du},
    {0x1970u, 0x1974u},
    {0x1980u, 0x19ABu},
    {0x19B0u, 0x19C9u},
    {0x19D0u, 0x19DAu},
    {0x1A00u, 0x1A16u},
    {0x1A20u, 0x1A54u},
    {0x1A80u, 0x1A89u},
    {0x1A90u, 0x1A99u},
    {0x1AA7u, 0x1AA7u},
    {0x1B05u, 0x1B33u},
    {0x1B45u, 0x1B4Bu},
    {0x1B50u, 0x1B59u},
    {0x1B83u, 0x1BA0u},
    {0x1BAEu, 0x1BE5u},
    {0x1C00u, 0x1C23u},
    {0x1C40u, 0x1C49u},
    {0x1C4Du, 0x1C7Du},
    {0x1C80u, 0x1C88u},
    {0x1C90u, 0x1CBAu},
    {0x1CBDu, 0x1CBFu},
    {0x1CE9u, 0x1CECu},
    {0x1CEEu, 0x1CF3u},
    {0x1CF5u, 0x1CF6u},
    {0x1CFAu, 0x1CFAu},
    {0x1D00u, 0x1DBFu},
    {0x1E00u, 0x1F15u},
    {0x1F18u, 0x1F1Du},
    {0x1F20u, 0x1F45u},
    {0x1F48u, 0x1F4Du},
    {0x1F50u, 0x1F57u},
    {0x1F59u, 0x1F59u},
    {0x1F5Bu, 0x1F5Bu},
    {0x1F5Du, 0x1F5Du},
    {0x1F5Fu, 0x1F7Du},
    {0x1F80u, 0x1FB4u},
    {0x1FB6u, 0x1FBCu},
    {0x1FBEu, 0x1FBEu},
    {0x1FC2u, 0x1FC4u},
    {0x1FC6u, 0x1FCCu},
    {0x1FD0u, 0x1FD3u},
    {0x1FD6u, 0x1FDBu},
    {0x1FE0u, 0x1FECu},
    {0x1FF2u, 0x1FF4u},
    {0x1FF6u, 0x1FFCu},
    {0x2070u, 0x2071u},
    {0x2074u, 0x2079u},
    {0x207Fu, 0x2089u},
    {0x2090u, 0x209Cu},
    {0x2102u, 0x2102u},
    {0x2107u, 0x2107u},
    {0x210Au, 0x2113u},
    {0x2115u, 0x2115u},
    {0x2119u, 0x211Du},
    {0x2124u, 0x2124u},
    {0x2126u, 0x2126u},
    {0x2128u, 0x2128u},
    {0x212Au, 0x212Du},
    {0x212Fu, 0x2139u},
    {0x213Cu, 0x213Fu},
    {0x2145u, 0x2149u},
    {0x214Eu, 0x214Eu},
    {0x2150u, 0x2189u},
    {0x2460u, 0x249Bu},
    {0x24EAu, 0x24FFu},
    {0x2776u, 0x2793u},
    {0x2C00u, 0x2C2Eu},
    {0x2C30u, 0x2C5Eu},
    {0x2C60u, 0x2CE4u},
    {0x2CEBu, 0x2CEEu},
    {0x2CF2u, 0x2CF3u},
    {0x2CFDu, 0x2CFDu},
    {0x2D00u, 0x2D25u},
    {0x2D27u, 0x2D27u},
    {0x2D2Du, 0x2D2Du},
    {0x2D30u, 0x2D67u},
    {0x2D6Fu, 0x2D6Fu},
    {0x2D80u, 0x2D96u},
    {0x2DA0u, 0x2DA6u},
    {0x2DA8u, 0x2DAEu},
    {0x2DB0u, 0x2DB6u},
    {0x2DB8u, 0x2DBEu},
    {0x2DC0u, 0x2DC6u},
    {0x2DC8u, 0x2DCEu},
    {0x2DD0u, 0x2DD6u},
    {0x2DD8u, 0x2DDEu},
    {0x2E2Fu, 0x2E2Fu},
    {0x3005u, 0x3007u},
    {0x3021u, 0x3029u},
    {0x3031u, 0x3035u},
    {0x3038u, 0x303Cu},
    {0x3041u, 0x3096u},
    {0x309Du, 0x309Fu},
    {0x30A1u, 0x30FAu},
    {0x30FCu, 0x30FFu},
    {0x3105u, 0x312Fu},
    {0x3131u, 0x318Eu},
    {0x3192u, 0x3195u},
    {0x31A0u, 0x31BFu},
    {0x31F0u, 0x31FFu},
    {0x3220u, 0x3229u},
    {0x3248u, 0x324Fu},
    {0x3251u, 0x325Fu},
    {0x3280u, 0x3289u},
    {0x32B1u, 0x32BFu},
    {0x3400u, 0x4DBFu},
    {0x4E00u, 0x9FFCu},
    {0xA000u, 0xA48Cu},
    {0xA4D0u, 0xA4FDu},
    {0xA500u, 0xA60Cu},
    {0xA610u, 0xA62Bu},
    {0xA640u, 0xA66Eu},
    {0xA67Fu, 0xA69Du},
    {0xA6A0u, 0xA6EFu},
    {0xA717u, 0xA71Fu},
    {0xA722u, 0xA788u},
    {0xA78Bu, 0xA7BFu},
    {0xA7C2u, 0xA7CAu},
    {0xA7F5u, 0xA801u},
    {0xA803u, 0xA805u},
    {0xA807u, 0xA80Au},
    {0xA80Cu, 0xA822u},
    {0xA830u, 0xA835u},
    {0xA840u, 0xA873u},
    {0xA882u, 0xA8B3u},
    {0xA8D0u, 0xA8D9u},
    {0xA8F2u, 0xA8F7u},
    {0xA8FBu, 0xA8FBu},
    {0xA8FDu, 0xA8FEu},
    {0xA900u, 0xA925u},
    {0xA930u, 0xA946u},
    {0xA960u, 0xA97Cu},
    {0xA984u, 0xA9B2u},
    {0xA9CFu, 0xA9D9u},
    {0xA9E0u, 0xA9E4u},
    {0xA9E6u, 0xA9FEu},
    {0xAA00u, 0xAA28u},
    {0xAA40u, 0xAA42u},
    {0xAA44u, 0xAA4Bu},
    {0xAA50u, 0xAA59u},
    {0xAA60u, 0xAA76u},
    {0xAA7Au, 0xAA7Au},
    {0xAA7Eu, 0xAAAFu},
    {0xAAB1u, 0xAAB1u},
    {0xAAB5u, 0xAAB6u},
    {0xAAB9u, 0xAABDu},
    {0xAAC0u, 0xAAC0u},
    {0xAAC2u, 0xAAC2u},
    {0xAADBu, 0xAADDu},
    {0xAAE0u, 0xAAEAu},
    {0xAAF2u, 0xAAF4u},
    {0xAB01u, 0xAB06u},
    {0xAB09u, 0xAB0Eu},
    {0xAB11u, 0xAB16u},
    {0xAB20u, 0xAB26u},
    {0xAB28u, 0xAB2Eu},
    {0xAB30u, 0xAB5Au},
    {0xAB5Cu, 0xAB69u},
    {0xAB70u, 0xABE2u},
    {0xABF0u, 0xABF9u},
    {0xAC00u, 0xD7A3u},
    {0xD7B0u, 0xD7C6u},
    {0xD7CBu, 0xD7FBu},
    {0xF900u, 0xFA6Du},
    {0xFA70u, 0xFAD9u},
    {0xFB00u, 0xFB06u},
    {0xFB13u, 0xFB17u},
    {0xFB1Du, 0xFB1Du},
    {0xFB1Fu, 0xFB28u},
    {0xFB2Au, 0xFB36u},
    {0xFB38u, 0xFB3Cu},
    {0xFB3Eu, 0xFB3Eu},
    {0xFB40u, 0xFB41u},
    {0xFB43u, 0xFB44u},
    {0xFB46u, 0xFBB1u},
    {0xFBD3u, 0xFD3Du},
    {0xFD50u, 0xFD8Fu},
    {0xFD92u, 0xFDC7u},
    {0xFDF0u, 0xFDFBu},
    {0xFE70u, 0xFE74u},
    {0xFE76u, 0xFEFCu},
    {0xFF10u, 0xFF19u},
    {0xFF21u, 0xFF3Au},
    {0xFF41u, 0xFF5Au},
    {0xFF66u, 0xFFBEu},
    {0xFFC2u, 0xFFC7u},
    {0xFFCAu, 0xFFCFu},
    {0xFFD2u, 0xFFD7u},
    {0xFFDAu, 0xFFDCu},
    {0x10000u, 0x1000Bu},
    {0x1000Du, 0x10026u},
    {0x10028u, 0x1003Au},
    {0x1003Cu, 0x1003Du},
    {0x1003Fu, 0x1004Du},
    {0x10050u, 0x1005Du},
    {0x10080u, 0x100FAu},
    {0x10107u, 0x10133u},
    {0x10140u, 0x10178u},
    {0x1018Au, 0x1018Bu},
    {0x10280u, 0x1029Cu},
    {0x102A0u, 0x102D0u},
    {0x102E1u, 0x102FBu},
    {0x10300u, 0x10323u},
    {0x1032Du, 0x1034Au},
    {0x10350u, 0x10375u},
    {0x10380u, 0x1039Du},
    {0x103A0u, 0x103C3u},
    {0x103C8u, 0x103CFu},
    {0x103D1u, 0x103D5u},
    {0x10400u, 0x1049Du},
    {0x104A0u, 0x104A9u},
    {0x104B0u, 0x104D3u},
    {0x104D8u, 0x104FBu},
    {0x10500u, 0x10527u},
    {0x10530u, 0x10563u},
    {0x10600u, 0x10736u},
    {0x10740u, 0x10755u},
    {0x10760u, 0x10767u},
    {0x10800u, 0x10805u},
    {0x10808u, 0x10808u},
    {0x1080Au, 0x10835u},
    {0x10837u, 0x10838u},
    {0x1083Cu, 0x1083Cu},
    {0x1083Fu, 0x10855u},
    {0x10858u, 0x10876u},
    {0x10879u, 0x1089Eu},
    {0x108A7u, 0x108AFu},
    {0x108E0u, 0x108F2u},
    {0x108F4u, 0x108F5u},
    {0x108FBu, 0x1091Bu},
    {0x10920u, 0x10939u},
    {0x10980u, 0x109B7u},
    {0x109BCu, 0x109CFu},
    {0x109D2u, 0x10A00u},
    {0x10A10u, 0x10A13u},
    {0x10A15u, 0x10A17u},
    {0x10A19u, 0x10A35u},
    {0x10A40u, 0x10A48u},
    {0x10A60u, 0x10A7Eu},
    {0x10A80u, 0x10A9Fu},
    {0x10AC0u, 0x10AC7u},
    {0x10AC9u, 0x10AE4u},
    {0x10AEBu, 0x10AEFu},
    {0x10B00u, 0x10B35u},
    {0x10B40u, 0x10B55u},
    {0x10B58u, 0x10B72u},
    {0x10B78u, 0x10B91u},
    {0x10BA9u, 0x10BAFu},
    {0x10C00u, 0x10C48u},
    {0x10C80u, 0x10CB2u},
    {0x10CC0u, 0x10CF2u},
    {0x10CFAu, 0x10D23u},
    {0x10D30u, 0x10D39u},
    {0x10E60u, 0x10E7Eu},
    {0x10E80u, 0x10EA9u},
    {0x10EB0u, 0x10EB1u},
    {0x10F00u, 0x10F27u},
    {0x10F30u, 0x10F45u},
    {0x10F51u, 0x10F54u},
    {0x10FB0u, 0x10FCBu},
    {0x10FE0u, 0x10FF6u},
    {0x11003u, 0x11037u},
    {0x11052u, 0x1106Fu},
    {0x11083u, 0x110AFu},
    {0x110D0u, 0x110E8u},
    {0x110F0u, 0x110F9u},
    {0x11103u, 0x11126u},
    {0x11136u, 0x1113Fu},
    {0x11144u, 0x11144u},
    {0x11147u, 0x11147u},
    {0x11150u, 0x11172u},
    {0x11176u, 0x11176u},
    {0x11183u, 0x111B2u},
    {0x111C1u, 0x111C4u},
    {0x111D0u, 0x111DAu},
    {0x111DCu, 0x111DCu},
    {0x111E1u, 0x111F4u},
    {0x11200u, 0x11211u},
    {0x11213u, 0x1122Bu},
    {0x11280u, 0x11286u},
    {0x11288u, 0x11288u},
    {0x1128Au, 0x1128Du},
    {0x1128Fu, 0x1129Du},
    {0x1129Fu, 0x112A8u},
    {0x112B0u, 0x112DEu},
    {0x112F0u, 0x112F9u},
    {0x11305u, 0x1130Cu},
    {0x1130Fu, 0x11310u},
    {0x11313u, 0x11328u},
    {0x1132Au, 0x11330u},
    {0x11332u, 0x11333u},
    {0x11335u, 0x11339u},
    {0x1133Du, 0x1133Du},
    {0x11350u, 0x11350u},
    {0x1135Du, 0x11361u},
    {0x11400u, 0x11434u},
    {0x11447u, 0x1144Au},
    {0x11450u, 0x11459u},
    {0x1145Fu, 0x11461u},
    {0x11480u, 0x114AFu},
    {0x114C4u, 0x114C5u},
    {0x114C7u, 0x114C7u},
    {0x114D0u, 0x114D9u},
    {0x11580u, 0x115AEu},
    {0x115D8u, 0x115DBu},
    {0x11600u, 0x1162Fu},
    {0x11644u, 0x11644u},
    {0x11650u, 0x11659u},
    {0x11680u, 0x116AAu},
    {0x116B8u, 0x116B8u},
    {0x116C0u, 0x116C9u},
    {0x11700u, 0x1171Au},
    {0x11730u, 0x1173Bu},
    {0x11800u, 0x1182Bu},
    {0x118A0u, 0x118F2u},
    {0x118FFu, 0x11906u},
    {0x11909u, 0x11909u},
    {0x1190Cu, 0x11913u},
    {0x11915u, 0x11916u},
    {0x11918u, 0x1192Fu},
    {0x1193Fu, 0x1193Fu},
    {0x11941u, 0x11941u},
    {0x11950u, 0x11959u},
    {0x119A0u, 0x119A7u},
    {0x119AAu, 0x119D0u},
    {0x119E1u, 0x119E1u},
    {0x119E3u, 0x119E3u},
    {0x11A00u, 0x11A00u},
    {0x11A0Bu, 0x11A32u},
    {0x11A3Au, 0x11A3Au},
    {0x11A50u, 0x11A50u},
    {0x11A5Cu, 0x11A89u},
    {0x11A9Du, 0x11A9Du},
    {0x11AC0u, 0x11AF8u},
    {0x11C00u, 0x11C08u},
    {0x11C0Au, 0x11C2Eu},
    {0x11C40u, 0x11C40u},
    {0x11C50u, 0x11C6Cu},
    {0x11C72u, 0x11C8Fu},
    {0x11D00u, 0x11D06u},
    {0x11D08u, 0x11D09u},
    {0x11D0Bu, 0x11D30u},
    {0x11D46u, 0x11D46u},
    {0x11D50u, 0x11D59u},
    {0x11D60u, 0x11D65u},
    {0x11D67u, 0x11D68u},
    {0x11D6Au, 0x11D89u},
    {0x11D98u, 0x11D98u},
    {0x11DA0u, 0x11DA9u},
    {0x11EE0u, 0x11EF2u},
    {0x11FB0u, 0x11FB0u},
    {0x11FC0u, 0x11FD4u},
    {0x12000u, 0x12399u},
    {0x12400u, 0x1246Eu},
    {0x12480u, 0x12543u},
    {0x13000u, 0x1342Eu},
    {0x14400u, 0x14646u},
    {0x16800u, 0x16A38u},
    {0x16A40u, 0x16A5Eu},
    {0x16A60u, 0x16A69u},
    {0x16AD0u, 0x16AEDu},
    {0x16B00u, 0x16B2Fu},
    {0x16B40u, 0x16B43u},
    {0x16B50u, 0x16B59u},
    {0x16B5Bu, 0x16B61u},
    {0x16B63u, 0x16B77u},
    {0x16B7Du, 0x16B8Fu},
    {0x16E40u, 0x16E96u},
    {0x16F00u, 0x16F4Au},
    {0x16F50u, 0x16F50u},
    {0x16F93u, 0x16F9Fu},
    {0x16FE0u, 0x16FE1u},
    {0x16FE3u, 0x16FE3u},
    {0x17000u, 0x187F7u},
    {0x18800u, 0x18CD5u},
    {0x18D00u, 0x18D08u},
    {0x1B000u, 0x1B11Eu},
    {0x1B150u, 0x1B152u},
    {0x1B164u, 0x1B167u},
    {0x1B170u, 0x1B2FBu},
    {0x1BC00u, 0x1BC6Au},
    {0x1BC70u, 0x1BC7Cu},
    {0x1BC80u, 0x1BC88u},
    {0x1BC90u, 0x1BC99u},
    {0x1D2E0u, 0x1D2F3u},
    {0x1D360u, 0x1D378u},
    {0x1D400u, 0x1D454u},
    {0x1D456u, 0x1D49Cu},
    {0x1D49Eu, 0x1D49Fu},
    {0x1D4A2u, 0x1D4A2u},
    {0x1D4A5u, 0x1D4A6u},
    {0x1D4A9u, 0x1D4ACu},
    {0x1D4AEu, 0x1D4B9u},
    {0x1D4BBu, 0x1D4BBu},
    {0x1D4BDu, 0x1D4C3u},
    {0x1D4C5u, 0x1D505u},
    {0x1D507u, 0x1D50Au},
    {0x1D50Du, 0x1D514u},
    {0x1D516u, 0x1D51Cu},
    {0x1D51Eu, 0x1D539u},
    {0x1D53Bu, 0x1D53Eu},
    {0x1D540u, 0x1D544u},
    {0x1D546u, 0x1D546u},
    {0x1D54Au, 0x1D550u},
    {0x1D552u, 0x1D6A5u},
    {0x1D6A8u, 0x1D6C0u},
    {0x1D6C2u, 0x1D6DAu},
    {0x1D6DCu, 0x1D6FAu},
    {0x1D6FCu, 0x1D714u},
    {0x1D716u, 0x1D734u},
    {0x1D736u, 0x1D74Eu},
    {0x1D750u, 0x1D76Eu},
    {0x1D770u, 0x1D788u},
    {0x1D78Au, 0x1D7A8u},
    {0x1D7AAu, 0x1D7C2u},
    {0x1D7C4u, 0x1D7CBu},
    {0x1D7CEu, 0x1D7FFu},
    {0x1E100u, 0x1E12Cu},
    {0x1E137u, 0x1E13Du},
    {0x1E140u, 0x1E149u},
    {0x1E14Eu, 0x1E14Eu},
    {0x1E2C0u, 0x1E2EBu},
    {0x1E2F0u, 0x1E2F9u},
    {0x1E800u, 0x1E8C4u},
    {0x1E8C7u, 0x1E8CFu},
    {0x1E900u, 0x1E943u},
    {0x1E94Bu, 0x1E94Bu},
    {0x1E950u, 0x1E959u},
    {0x1EC71u, 0x1ECABu},
    {0x1ECADu, 0x1ECAFu},
    {0x1ECB1u, 0x1ECB4u},
    {0x1ED01u, 0x1ED2Du},
    {0x1ED2Fu, 0x1ED3Du},
    {0x1EE00u, 0x1EE03u},
    {0x1EE05u, 0x1EE1Fu},
    {0x1EE21u, 0x1EE22u},
    {0x1EE24u, 0x1EE24u},
    {0x1EE27u, 0x1EE27u},
    {0x1EE29u, 0x1EE32u},
    {0x1EE34u, 0x1EE37u},
    {0x1EE39u, 0x1EE39u},
    {0x1EE3Bu, 0x1EE3Bu},
    {0x1EE42u, 0x1EE42u},
    {0x1EE47u, 0x1EE47u},
    {0x1EE49u, 0x1EE49u},
    {0x1EE4Bu, 0x1EE4Bu},
    {0x1EE4Du, 0x1EE4Fu},
    {0x1EE51u, 0x1EE52u},
    {0x1EE54u, 0x1EE54u},
    {0x1EE57u, 0x1EE57u},
    {0x1EE59u, 0x1EE59u},
    {0x1EE5Bu, 0x1EE5Bu},
    {0x1EE5Du, 0x1EE5Du},
    {0x1EE5Fu, 0x1EE5Fu},
    {0x1EE61u, 0x1EE62u},
    {0x1EE64u, 0x1EE64u},
    {0x1EE67u, 0x1EE6Au},
    {0x1EE6Cu, 0x1EE72u},
    {0x1EE74u, 0x1EE77u},
    {0x1EE79u, 0x1EE7Cu},
    {0x1EE7Eu, 0x1EE7Eu},
    {0x1EE80u, 0x1EE89u},
    {0x1EE8Bu, 0x1EE9Bu},
    {0x1EEA1u, 0x1EEA3u},
    {0x1EEA5u, 0x1EEA9u},
    {0x1EEABu, 0x1EEBBu},
    {0x1F100u, 0x1F10Cu},
    {0x1FBF0u, 0x1FBF9u},
    {0x20000u, 0x2A6DDu},
    {0x2A700u, 0x2B734u},
    {0x2B740u, 0x2B81Du},
    {0x2B820u, 0x2CEA1u},
    {0x2CEB0u, 0x2EBE0u},
    {0x2F800u, 0x2FA1Du},
    {0x30000u, 0x3134Au},
};
const std::size_t kWordCount = 706;

}  // namespace synthline::unitab
