// Generated by gen_student_t_table.py (mpmath, 40 digits). Do not edit.
// (degrees of freedom, |t|, two-sided p)
pub const TABLE: [(u32, f64, f64); 882] = [
    (3, 0.05_f64, 9.6326514459138632724e-1_f64),
    (3, 0.5_f64, 6.5144796484815099444e-1_f64),
    (3, 1_f64, 3.9100221895577064191e-1_f64),
    (3, 2_f64, 1.3932596855884317685e-1_f64),
    (3, 3.5_f64, 3.9481037619282799946e-2_f64),
    (3, 5_f64, 1.5392438073302300987e-2_f64),
    (3, 8_f64, 4.0765775877854682444e-3_f64),
    (3, 12_f64, 1.245015800789336738e-3_f64),
    (3, 20_f64, 2.7320325024731172023e-4_f64),
    (4, 0.05_f64, 9.6251951844119452321e-1_f64),
    (4, 0.5_f64, 6.4332996318186327424e-1_f64),
    (4, 1_f64, 3.7390096630005888501e-1_f64),
    (4, 2_f64, 1.161165235168155945e-1_f64),
    (4, 3.5_f64, 2.4896163460222752104e-2_f64),
    (4, 5_f64, 7.4904338812745245614e-3_f64),
    (4, 8_f64, 1.3238969092171678633e-3_f64),
    (4, 12_f64, 2.7642854850297295476e-4_f64),
    (4, 20_f64, 3.6883105802997326482e-5_f64),
    (5, 0.05_f64, 9.6205829997081572584e-1_f64),
    (5, 0.5_f64, 6.3829887164092900671e-1_f64),
    (5, 1_f64, 3.632174676491226256e-1_f64),
    (5, 2_f64, 1.0193947882985835625e-1_f64),
    (5, 3.5_f64, 1.7284431785293354662e-2_f64),
    (5, 5_f64, 4.1047159800533224205e-3_f64),
    (5, 8_f64, 4.9290666057244408449e-4_f64),
    (5, 12_f64, 7.0894925171615226866e-5_f64),
    (5, 20_f64, 5.7755163732241720923e-6_f64),
    (6, 0.05_f64, 9.6174531737469147253e-1_f64),
    (6, 0.5_f64, 6.3488e-1_f64),
    (6, 1_f64, 3.5591768374958217403e-1_f64),
    (6, 2_f64, 9.2426311531675131716e-2_f64),
    (6, 3.5_f64, 1.2826338332805318528e-2_f64),
    (6, 5_f64, 2.4523417607585509277e-3_f64),
    (6, 8_f64, 2.0346450207905071343e-4_f64),
    (6, 12_f64, 2.0307406195373191941e-5_f64),
    (6, 20_f64, 1.0142552751699579744e-6_f64),
    (7, 0.05_f64, 9.6151917802680128176e-1_f64),
    (7, 0.5_f64, 6.3240713568928421635e-1_f64),
    (7, 1_f64, 3.5061666282020752657e-1_f64),
    (7, 2_f64, 8.561932856297607676e-2_f64),
    (7, 3.5_f64, 9.9930408818855472629e-3_f64),
    (7, 5_f64, 1.5652779531728245826e-3_f64),
    (7, 8_f64, 9.1149211708753624176e-5_f64),
    (7, 12_f64, 6.3583103781851002706e-6_f64),
    (7, 20_f64, 1.9548827108003992915e-7_f64),
    (8, 0.05_f64, 9.6134821507850131218e-1_f64),
    (8, 0.5_f64, 6.3053607555697634162e-1_f64),
    (8, 1_f64, 3.4659350708733424783e-1_f64),
    (8, 2_f64, 8.0516237957262671337e-2_f64),
    (8, 3.5_f64, 8.079082260411890606e-3_f64),
    (8, 5_f64, 1.052825793366539274e-3_f64),
    (8, 8_f64, 4.3668260313280251161e-5_f64),
    (8, 12_f64, 2.1438667476887711505e-6_f64),
    (8, 20_f64, 4.0739183286749222906e-8_f64),
    (9, 0.05_f64, 9.6121446471381468033e-1_f64),
    (9, 0.5_f64, 6.2907129982602647961e-1_f64),
    (9, 1_f64, 3.4343639613791351488e-1_f64),
    (9, 2_f64, 7.6552823770701041203e-2_f64),
    (9, 3.5_f64, 6.7235157630589562672e-3_f64),
    (9, 5_f64, 7.3896790980324270114e-4_f64),
    (9, 8_f64, 2.213481680940015368e-5_f64),
    (9, 12_f64, 7.6998862229856520332e-7_f64),
    (9, 20_f64, 9.0795212999165441723e-9_f64),
    (10, 0.05_f64, 9.6110698704740126004e-1_f64),
    (10, 0.5_f64, 6.2789360574297294271e-1_f64),
    (10, 1_f64, 3.4089313230205987267e-1_f64),
    (10, 2_f64, 7.3388034770740365618e-2_f64),
    (10, 3.5_f64, 5.726505429885215859e-3_f64),
    (10, 5_f64, 5.3733360275645261709e-4_f64),
    (10, 8_f64, 1.1774942789666159782e-5_f64),
    (10, 12_f64, 2.9214088247699870879e-7_f64),
    (10, 20_f64, 2.1460623172042518114e-9_f64),
    (11, 0.05_f64, 9.6101874264460952993e-1_f64),
    (11, 0.5_f64, 6.2692621918384692062e-1_f64),
    (11, 1_f64, 3.3880069619620169861e-1_f64),
    (11, 2_f64, 7.0803955068034514828e-2_f64),
    (11, 3.5_f64, 4.9702905138911043774e-3_f64),
    (11, 5_f64, 4.025298181245196114e-4_f64),
    (11, 8_f64, 6.5322171553847068552e-6_f64),
    (11, 12_f64, 1.1632840502619125764e-7_f64),
    (11, 20_f64, 5.3443250785351108644e-10_f64),
    (12, 0.05_f64, 9.6094499816513517499e-1_f64),
    (12, 0.5_f64, 6.261174762253240814e-1_f64),
    (12, 1_f64, 3.3704905795358447173e-1_f64),
    (12, 2_f64, 6.86550140380859375e-2_f64),
    (12, 3.5_f64, 4.3818694317481489059e-3_f64),
    (12, 5_f64, 3.093112112838884655e-4_f64),
    (12, 8_f64, 3.7598982247502572831e-6_f64),
    (12, 12_f64, 4.8359284866456855343e-8_f64),
    (12, 20_f64, 1.3947885992511480852e-10_f64),
    (13, 0.05_f64, 9.6088245432063178366e-1_f64),
    (13, 0.5_f64, 6.2543134108121574481e-1_f64),
    (13, 1_f64, 3.3556127786542250193e-1_f64),
    (13, 2_f64, 6.6840357648254244145e-2_f64),
    (13, 3.5_f64, 3.9140460710413828494e-3_f64),
    (13, 5_f64, 2.4295400581920616737e-4_f64),
    (13, 8_f64, 2.2361652585980856211e-6_f64),
    (13, 12_f64, 2.0897608830152982626e-8_f64),
    (13, 20_f64, 3.7983029624866731117e-11_f64),
    (14, 0.05_f64, 9.6082874143321088772e-1_f64),
    (14, 0.5_f64, 6.248419162396947472e-1_f64),
    (14, 1_f64, 3.3428194339465759028e-1_f64),
    (14, 2_f64, 6.5287952889111968506e-2_f64),
    (14, 3.5_f64, 3.5352081058589602797e-3_f64),
    (14, 5_f64, 1.9451530625726602164e-4_f64),
    (14, 8_f64, 1.3694566800218674089e-6_f64),
    (14, 12_f64, 9.3533307393678530567e-9_f64),
    (14, 20_f64, 1.0753400543231246589e-11_f64),
    (15, 0.05_f64, 9.6078211379039017563e-1_f64),
    (15, 0.5_f64, 6.2433011352007556121e-1_f64),
    (15, 1_f64, 3.3317013591547634278e-1_f64),
    (15, 2_f64, 6.3945007284720202851e-2_f64),
    (15, 3.5_f64, 3.2235309437945009038e-3_f64),
    (15, 5_f64, 1.5836951462202714481e-4_f64),
    (15, 8_f64, 8.6109303827076178939e-7_f64),
    (15, 12_f64, 4.3227341134471637495e-9_f64),
    (15, 20_f64, 3.1551925534904381381e-12_f64),
    (16, 0.05_f64, 9.6074125708008793156e-1_f64),
    (16, 0.5_f64, 6.238815553000459171e-1_f64),
    (16, 1_f64, 3.3219498465297947233e-1_f64),
    (16, 2_f64, 6.2771963514603346883e-2_f64),
    (16, 3.5_f64, 2.9635480116439694372e-3_f64),
    (16, 5_f64, 1.3086769808078332873e-4_f64),
    (16, 8_f64, 5.5454476436932284471e-7_f64),
    (16, 12_f64, 2.0574632136042283089e-9_f64),
    (16, 20_f64, 9.5690336254900906444e-13_f64),
    (17, 0.05_f64, 9.6070516295636380948e-1_f64),
    (17, 0.5_f64, 6.2348520656571134852e-1_f64),
    (17, 1_f64, 3.3133276203867883009e-1_f64),
    (17, 2_f64, 6.1738606530119164791e-2_f64),
    (17, 3.5_f64, 2.7440453801037621625e-3_f64),
    (17, 5_f64, 1.0957825046294123161e-4_f64),
    (17, 8_f64, 3.6499332431446651796e-7_f64),
    (17, 12_f64, 1.0062315526421902557e-9_f64),
    (17, 20_f64, 2.9927008195203535361e-13_f64),
    (18, 0.05_f64, 9.606730449447468821e-1_f64),
    (18, 0.5_f64, 6.2313245729658634268e-1_f64),
    (18, 1_f64, 3.3056493127818425602e-1_f64),
    (18, 2_f64, 6.0821465669332525789e-2_f64),
    (18, 3.5_f64, 2.556727366771486787e-3_f64),
    (18, 5_f64, 9.2841425573767988725e-5_f64),
    (18, 8_f64, 2.450720532219100206e-7_f64),
    (18, 12_f64, 5.0465111025636570688e-10_f64),
    (18, 20_f64, 9.6322307548273298444e-14_f64),
    (19, 0.05_f64, 9.6064428062643769535e-1_f64),
    (19, 0.5_f64, 6.2281649128644171768e-1_f64),
    (19, 1_f64, 3.2987680092112505885e-1_f64),
    (19, 2_f64, 6.0002036386098366062e-2_f64),
    (19, 3.5_f64, 2.3953466896828113199e-3_f64),
    (19, 5_f64, 7.9499749984176337865e-5_f64),
    (19, 8_f64, 1.6759546882818137411e-7_f64),
    (19, 12_f64, 2.5908946372221993148e-10_f64),
    (19, 20_f64, 3.184762812245264033e-14_f64),
    (20, 0.05_f64, 9.6061837099878961184e-1_f64),
    (20, 0.5_f64, 6.2253184228102359735e-1_f64),
    (20, 1_f64, 3.2925657717170906426e-1_f64),
    (20, 2_f64, 5.926553544657047297e-2_f64),
    (20, 3.5_f64, 2.2551231530571677739e-3_f64),
    (20, 5_f64, 6.8730285795421973135e-5_f64),
    (20, 8_f64, 1.1656628271488522551e-7_f64),
    (20, 12_f64, 1.3595557025880679213e-10_f64),
    (20, 20_f64, 1.0799864534210477017e-14_f64),
    (21, 0.05_f64, 9.6059491134174139657e-1_f64),
    (21, 0.5_f64, 6.2227407565421881604e-1_f64),
    (21, 1_f64, 3.2869468323646367473e-1_f64),
    (21, 2_f64, 5.8600012048710434348e-2_f64),
    (21, 3.5_f64, 2.1323464324016467815e-3_f64),
    (21, 5_f64, 5.9937632455132395946e-5_f64),
    (21, 8_f64, 8.2352847518259023732e-8_f64),
    (21, 12_f64, 7.2816345686799464419e-11_f64),
    (21, 20_f64, 3.75083165944912319e-15_f64),
    (22, 0.05_f64, 9.6057356996217360822e-1_f64),
    (22, 0.5_f64, 6.2203955607548220394e-1_f64),
    (22, 1_f64, 3.2818326188067060308e-1_f64),
    (22, 2_f64, 5.7995701702496077482e-2_f64),
    (22, 3.5_f64, 2.0240991885276477167e-3_f64),
    (22, 5_f64, 5.2684120757182024789e-5_f64),
    (22, 8_f64, 5.9032568211538976014e-8_f64),
    (22, 12_f64, 3.9756018098921689937e-11_f64),
    (22, 20_f64, 1.3324283937644430711e-15_f64),
    (23, 0.05_f64, 9.6055407243882529277e-1_f64),
    (23, 0.5_f64, 6.2182527524232831823e-1_f64),
    (23, 1_f64, 3.2771580614285854629e-1_f64),
    (23, 2_f64, 5.7444548992082724252e-2_f64),
    (23, 3.5_f64, 1.9280605524275012897e-3_f64),
    (23, 5_f64, 4.6643331542067692041e-5_f64),
    (23, 8_f64, 4.2891915196762243864e-8_f64),
    (23, 12_f64, 2.2101889236582473794e-11_f64),
    (23, 20_f64, 4.8357007638203739203e-16_f64),
    (24, 0.05_f64, 9.6053618977621529202e-1_f64),
    (24, 0.5_f64, 6.2162872231398666404e-1_f64),
    (24, 1_f64, 3.2728688127978518872e-1_f64),
    (24, 2_f64, 5.6939849936591649156e-2_f64),
    (24, 3.5_f64, 1.8423643546640207682e-3_f64),
    (24, 5_f64, 4.1568563598105634887e-5_f64),
    (24, 8_f64, 3.1560006075132204527e-8_f64),
    (24, 12_f64, 1.2498691550338165142e-11_f64),
    (24, 20_f64, 1.7910694152999804625e-16_f64),
    (25, 0.05_f64, 9.6051972938128168691e-1_f64),
    (25, 0.5_f64, 6.21447785190228575e-1_f64),
    (25, 1_f64, 3.2689191269184121536e-1_f64),
    (25, 2_f64, 5.6475980426897294246e-2_f64),
    (25, 3.5_f64, 1.7654953143569571016e-3_f64),
    (25, 5_f64, 3.7271074814453944784e-5_f64),
    (25, 8_f64, 2.3497506157188556915e-8_f64),
    (25, 12_f64, 7.1829730750348342873e-12_f64),
    (25, 20_f64, 6.7636510560085657254e-17_f64),
    (26, 0.05_f64, 9.6050452810819426858e-1_f64),
    (26, 0.5_f64, 6.2128067439713083199e-1_f64),
    (26, 1_f64, 3.2652702226061577815e-1_f64),
    (26, 2_f64, 5.6048187529512998086e-2_f64),
    (26, 3.5_f64, 1.6962119809345523871e-3_f64),
    (26, 5_f64, 3.3604830089254679818e-5_f64),
    (26, 8_f64, 1.7689184786335977497e-8_f64),
    (26, 12_f64, 4.1915938458627443794e-12_f64),
    (26, 20_f64, 2.6018316529201790607e-17_f64),
    (27, 0.05_f64, 9.6049044683877770868e-1_f64),
    (27, 0.5_f64, 6.2112586376325108979e-1_f64),
    (27, 1_f64, 3.2618890067972695498e-1_f64),
    (27, 2_f64, 5.5652427328037725791e-2_f64),
    (27, 3.5_f64, 1.6334888137380616471e-3_f64),
    (27, 5_f64, 3.0455654435946017062e-5_f64),
    (27, 8_f64, 1.3455583653407668984e-8_f64),
    (27, 12_f64, 2.4817087187538937017e-12_f64),
    (27, 20_f64, 1.0187105711460425074e-17_f64),
    (28, 0.05_f64, 9.6047736621711759261e-1_f64),
    (28, 0.5_f64, 6.2098204371906039082e-1_f64),
    (28, 1_f64, 3.2587470687166101004e-1_f64),
    (28, 2_f64, 5.5285237641956907632e-2_f64),
    (28, 3.5_f64, 1.5764721412354639893e-3_f64),
    (28, 5_f64, 2.7733414997812646852e-5_f64),
    (28, 8_f64, 1.0335674381699510046e-8_f64),
    (28, 12_f64, 1.4897300791947365061e-12_f64),
    (28, 20_f64, 4.0566530064722966195e-18_f64),
    (29, 0.05_f64, 9.6046518326146691704e-1_f64),
    (29, 0.5_f64, 6.2084808419378136402e-1_f64),
    (29, 1_f64, 3.2558198801619354111e-1_f64),
    (29, 2_f64, 5.4943637182967189248e-2_f64),
    (29, 3.5_f64, 1.5244463146546053324e-3_f64),
    (29, 5_f64, 2.5366315735423232227e-5_f64),
    (29, 8_f64, 8.0125756496317027434e-9_f64),
    (29, 12_f64, 9.060708333137179496e-13_f64),
    (29, 20_f64, 1.6418237431669114683e-18_f64),
    (30, 0.05_f64, 9.6045380864995310526e-1_f64),
    (30, 0.5_f64, 6.2072300488512728596e-1_f64),
    (30, 1_f64, 3.2530861542602989123e-1_f64),
    (30, 2_f64, 5.4625044962983103921e-2_f64),
    (30, 3.5_f64, 1.4768074376442530632e-3_f64),
    (30, 5_f64, 2.3296685467007795133e-5_f64),
    (30, 8_f64, 6.2658224757007589434e-9_f64),
    (30, 12_f64, 5.580185415199256063e-13_f64),
    (30, 20_f64, 6.7490836657712864012e-19_f64),
    (31, 0.05_f64, 9.6044316452879365189e-1_f64),
    (31, 0.5_f64, 6.2060595124771892652e-1_f64),
    (31, 1_f64, 3.2505273272353346274e-1_f64),
    (31, 2_f64, 5.4327215367175707669e-2_f64),
    (31, 3.5_f64, 1.4330427877472187067e-3_f64),
    (31, 5_f64, 2.147783467017563137e-5_f64),
    (31, 8_f64, 4.940263701903379558e-9_f64),
    (31, 12_f64, 3.4779268004197403515e-13_f64),
    (31, 20_f64, 2.8161788997864676472e-19_f64),
    (32, 0.05_f64, 9.6043318272933891382e-1_f64),
    (32, 0.5_f64, 6.2049617495689389195e-1_f64),
    (32, 1_f64, 3.2481271365109849562e-1_f64),
    (32, 2_f64, 5.404818545439049456e-2_f64),
    (32, 3.5_f64, 1.3927145576679908659e-3_f64),
    (32, 5_f64, 1.9871686086657884461e-5_f64),
    (32, 8_f64, 3.9255253803430657347e-9_f64),
    (32, 12_f64, 2.1925440616852853037e-13_f64),
    (32, 20_f64, 1.1921419326945255075e-19_f64),
    (33, 0.05_f64, 9.6042380330767108114e-1_f64),
    (33, 0.5_f64, 6.2039301790419052486e-1_f64),
    (33, 1_f64, 3.2458712748885131736e-1_f64),
    (33, 2_f64, 5.3786231882546125574e-2_f64),
    (33, 3.5_f64, 1.3554469062151688653e-3_f64),
    (33, 5_f64, 1.8446971682512537337e-5_f64),
    (33, 8_f64, 3.14228061471391052e-9_f64),
    (33, 12_f64, 1.3973934971417513678e-13_f64),
    (33, 20_f64, 5.1170427487960661803e-20_f64),
    (34, 0.05_f64, 9.604149733406821989e-1_f64),
    (34, 0.5_f64, 6.202958990015375075e-1_f64),
    (34, 1_f64, 3.2437471052620568808e-1_f64),
    (34, 2_f64, 5.3539835470450431464e-2_f64),
    (34, 3.5_f64, 1.3209155675454275466e-3_f64),
    (34, 5_f64, 1.7177848367436236019e-5_f64),
    (34, 8_f64, 2.5329611735025988359e-9_f64),
    (34, 12_f64, 8.9997860874887468136e-14_f64),
    (34, 20_f64, 2.225968289803427934e-20_f64),
    (35, 0.05_f64, 9.6040664592758211294e-1_f64),
    (35, 0.5_f64, 6.2020430323549573489e-1_f64),
    (35, 1_f64, 3.2417434238603876547e-1_f64),
    (35, 2_f64, 5.3307651863196782442e-2_f64),
    (35, 3.5_f64, 1.2888394543910421549e-3_f64),
    (35, 5_f64, 1.6042826314650486453e-5_f64),
    (35, 8_f64, 2.0554034270111460563e-9_f64),
    (35, 12_f64, 5.8546669751204353616e-14_f64),
    (35, 20_f64, 9.8090367559102208186e-21_f64),
    (36, 0.05_f64, 9.6039877935707692863e-1_f64),
    (36, 0.5_f64, 6.2011777253636626576e-1_f64),
    (36, 1_f64, 3.2398502626512719479e-1_f64),
    (36, 2_f64, 5.3088487109885137701e-2_f64),
    (36, 3.5_f64, 1.2589738275908683779e-3_f64),
    (36, 5_f64, 1.5023932743790878649e-5_f64),
    (36, 8_f64, 1.6784553699011171601e-9_f64),
    (36, 12_f64, 3.8455098891979126346e-14_f64),
    (36, 20_f64, 4.3767505436117784842e-21_f64),
    (37, 0.05_f64, 9.6039133640901532712e-1_f64),
    (37, 0.5_f64, 6.2003589812057573126e-1_f64),
    (37, 1_f64, 3.2380587235541823134e-1_f64),
    (37, 2_f64, 5.2881277220735419037e-2_f64),
    (37, 3.5_f64, 1.231104705031390453e-3_f64),
    (37, 5_f64, 1.4106054575085124389e-5_f64),
    (37, 8_f64, 1.3789087897926775656e-9_f64),
    (37, 12_f64, 2.5493137571422847954e-14_f64),
    (37, 20_f64, 1.9765909453877208324e-21_f64),
    (38, 0.05_f64, 9.6038428376583963085e-1_f64),
    (38, 0.5_f64, 6.19958314036296585e-1_f64),
    (38, 1_f64, 3.2363608386440811755e-1_f64),
    (38, 2_f64, 5.2685070967667052096e-2_f64),
    (38, 3.5_f64, 1.2050442581313072431e-3_f64),
    (38, 5_f64, 1.3276418057994228747e-5_f64),
    (38, 8_f64, 1.1393362748499628306e-9_f64),
    (38, 12_f64, 1.7051240002845168011e-14_f64),
    (38, 20_f64, 9.0313558133049308786e-22_f64),
    (39, 0.05_f64, 9.6037759151421568952e-1_f64),
    (39, 0.5_f64, 6.1988469169737879971e-1_f64),
    (39, 1_f64, 3.2347494517138331665e-1_f64),
    (39, 2_f64, 5.2499015343854756139e-2_f64),
    (39, 3.5_f64, 1.1806270003387309686e-3_f64),
    (39, 5_f64, 1.2524174089367222237e-5_f64),
    (39, 8_f64, 9.4655224124475448603e-10_f64),
    (39, 12_f64, 1.1502881956646546859e-14_f64),
    (39, 20_f64, 4.1735060163529989134e-22_f64),
    (40, 0.05_f64, 9.6037123272112438011e-1_f64),
    (40, 0.5_f64, 6.1981473523344803153e-1_f64),
    (40, 1_f64, 3.2332181174829087097e-1_f64),
    (40, 2_f64, 5.2322343215049214926e-2_f64),
    (40, 3.5_f64, 1.1577066147574722591e-3_f64),
    (40, 5_f64, 1.1840065669659496409e-5_f64),
    (40, 8_f64, 7.9050841101045387494e-10_f64),
    (40, 12_f64, 7.8241713042559726229e-15_f64),
    (40, 20_f64, 1.9498911633291812493e-22_f64),
    (41, 0.05_f64, 9.6036518307175182373e-1_f64),
    (41, 0.5_f64, 6.1974817751745811503e-1_f64),
    (41, 1_f64, 3.2317610154595446211e-1_f64),
    (41, 2_f64, 5.2154362786918928237e-2_f64),
    (41, 3.5_f64, 1.1361533005540604885e-3_f64),
    (41, 5_f64, 1.1216159630496241e-5_f64),
    (41, 8_f64, 6.6349450500649195862e-10_f64),
    (41, 12_f64, 5.3644058980821212974e-15_f64),
    (41, 20_f64, 9.2074226313654789886e-23_f64),
    (42, 0.05_f64, 9.6035942055891789551e-1_f64),
    (42, 0.5_f64, 6.1968477675828759971e-1_f64),
    (42, 1_f64, 3.2303728760298701773e-1_f64),
    (42, 2_f64, 5.199444858448411884e-2_f64),
    (42, 3.5_f64, 1.1158515427998886403e-3_f64),
    (42, 5_f64, 1.0645628979962236407e-5_f64),
    (42, 8_f64, 5.5955521688158451767e-10_f64),
    (42, 12_f64, 3.7062452411509123419e-15_f64),
    (42, 20_f64, 4.3928722059466080635e-23_f64),
    (43, 0.05_f64, 9.6035392521568421766e-1_f64),
    (43, 0.5_f64, 6.1962431356679162392e-1_f64),
    (43, 1_f64, 3.2290489167960759511e-1_f64),
    (43, 2_f64, 5.1842033696455256006e-2_f64),
    (43, 3.5_f64, 1.0966982297507085264e-3_f64),
    (43, 5_f64, 1.0122575358832267378e-5_f64),
    (43, 8_f64, 4.7406171655260459146e-10_f64),
    (43, 12_f64, 2.5796458196826636451e-15_f64),
    (43, 20_f64, 2.1169615892122748478e-23_f64),
    (44, 0.05_f64, 9.6034867888429696036e-1_f64),
    (44, 0.5_f64, 6.1956658842030168225e-1_f64),
    (44, 1_f64, 3.2277847875430945782e-1_f64),
    (44, 2_f64, 5.1696603082390856663e-2_f64),
    (44, 3.5_f64, 1.0786010566365023569e-3_f64),
    (44, 5_f64, 9.6418834688437151952e-6_f64),
    (44, 8_f64, 4.0339443705495561708e-10_f64),
    (44, 12_f64, 1.8083797247656685307e-15_f64),
    (44, 20_f64, 1.0301695012647531278e-23_f64),
    (45, 0.05_f64, 9.6034366501583221041e-1_f64),
    (45, 0.5_f64, 6.1951141946384497051e-1_f64),
    (45, 1_f64, 3.2265765224996135707e-1_f64),
    (45, 2_f64, 5.1557687776644335766e-2_f64),
    (45, 3.5_f64, 1.0614771668477278426e-3_f64),
    (45, 5_f64, 9.1991011284772935037e-6_f64),
    (45, 8_f64, 3.4470660900988450621e-10_f64),
    (45, 12_f64, 1.2764935245667624677e-15_f64),
    (45, 20_f64, 5.060796765921776945e-24_f64),
    (46, 0.05_f64, 9.6033886849588774387e-1_f64),
    (46, 0.5_f64, 6.1945864059704680062e-1_f64),
    (46, 1_f64, 3.2254204987899007383e-1_f64),
    (46, 2_f64, 5.1424859852049285521e-2_f64),
    (46, 3.5_f64, 1.0452519907186744118e-3_f64),
    (46, 5_f64, 8.7903399806382728809e-6_f64),
    (46, 8_f64, 2.9574681161520141235e-10_f64),
    (46, 12_f64, 9.0708520888620228667e-16_f64),
    (46, 20_f64, 2.5091823265591490211e-24_f64),
    (47, 0.05_f64, 9.6033427549245486502e-1_f64),
    (47, 0.5_f64, 6.1940809980433228918e-1_f64),
    (47, 1_f64, 3.2243134001596718543e-1_f64),
    (47, 2_f64, 5.1297728029705849718e-2_f64),
    (47, 3.5_f64, 1.0298582494953615369e-3_f64),
    (47, 5_f64, 8.4121929277124399195e-6_f64),
    (47, 8_f64, 2.5472495806584438448e-10_f64),
    (47, 12_f64, 6.4875981646586068235e-16_f64),
    (47, 20_f64, 1.2552849699908173081e-24_f64),
    (48, 0.05_f64, 9.6032987332274621525e-1_f64),
    (48, 0.5_f64, 6.1935965769308024058e-1_f64),
    (48, 1_f64, 3.2232521852111634168e-1_f64),
    (48, 2_f64, 5.1175933840240450058e-2_f64),
    (48, 3.5_f64, 1.015235097964989608e-3_f64),
    (48, 5_f64, 8.0616651814710411425e-6_f64),
    (48, 8_f64, 2.2021046133808872792e-10_f64),
    (48, 12_f64, 4.6691371321737068368e-16_f64),
    (48, 20_f64, 6.3350146399788977648e-25_f64),
    (49, 0.05_f64, 9.6032565033628012709e-1_f64),
    (49, 0.5_f64, 6.1931318621013137059e-1_f64),
    (49, 1_f64, 3.2222340595067559767e-1_f64),
    (49, 2_f64, 5.1059148257418093204e-2_f64),
    (49, 3.5_f64, 1.0013273839442373848e-3_f64),
    (49, 5_f64, 7.7361164462890547774e-6_f64),
    (49, 8_f64, 1.9105439552955454305e-10_f64),
    (49, 12_f64, 3.3808104947973984218e-16_f64),
    (49, 20_f64, 3.2244149483734697252e-25_f64),
    (50, 0.05_f64, 9.6032159581195263765e-1_f64),
    (50, 0.5_f64, 6.1926856751177126202e-1_f64),
    (50, 1_f64, 3.2212564510024450842e-1_f64),
    (50, 2_f64, 5.0947068737693247512e-2_f64),
    (50, 3.5_f64, 9.8808500662562089556e-4_f64),
    (50, 5_f64, 7.4332122472325739555e-6_f64),
    (50, 8_f64, 1.6632966028321383645e-10_f64),
    (50, 12_f64, 2.4623806253325446324e-16_f64),
    (50, 20_f64, 1.654852194743963597e-25_f64),
    (51, 0.05_f64, 9.6031769986718307751e-1_f64),
    (51, 0.5_f64, 6.1922569296619710828e-1_f64),
    (51, 1_f64, 3.2203169883565129897e-1_f64),
    (51, 2_f64, 5.0839416609742393e-2_f64),
    (51, 3.5_f64, 9.7546235885791311875e-4_f64),
    (51, 5_f64, 7.1508828019793891086e-6_f64),
    (51, 8_f64, 1.4528473267472517643e-10_f64),
    (51, 12_f64, 1.803690694408561933e-16_f64),
    (51, 20_f64, 8.5621600656565431948e-26_f64),
    (52, 0.05_f64, 9.6031395337751273591e-1_f64),
    (52, 0.5_f64, 6.1918446227069533571e-1_f64),
    (52, 1_f64, 3.2194134817283381297e-1_f64),
    (52, 2_f64, 5.0735934766662647666e-2_f64),
    (52, 3.5_f64, 9.6341784093791189733e-4_f64),
    (52, 5_f64, 6.8872881414874127176e-6_f64),
    (52, 8_f64, 1.2730773269136036322e-10_f64),
    (52, 12_f64, 1.3285176044785669986e-16_f64),
    (52, 20_f64, 4.4651684680538971188e-26_f64),
    (53, 0.05_f64, 9.6031034790527998451e-1_f64),
    (53, 0.5_f64, 6.1914478266843068504e-1_f64),
    (53, 1_f64, 3.2185439057401076143e-1_f64),
    (53, 2_f64, 5.0636385620689934281e-2_f64),
    (53, 3.5_f64, 9.5191343553315469009e-4_f64),
    (53, 5_f64, 6.6407884271455852167e-6_f64),
    (53, 8_f64, 1.118983604620663077e-10_f64),
    (53, 12_f64, 9.8378467547620980988e-17_f64),
    (53, 20_f64, 2.3466088349906979907e-26_f64),
    (54, 0.05_f64, 9.6030687563619859639e-1_f64),
    (54, 0.5_f64, 6.1910656825197676454e-1_f64),
    (54, 1_f64, 3.2177063843224364033e-1_f64),
    (54, 2_f64, 5.0540549286260393264e-2_f64),
    (54, 3.5_f64, 9.4091433502971833442e-4_f64),
    (54, 5_f64, 6.4099186057768785754e-6_f64),
    (54, 8_f64, 9.8645873491698851434e-11_f64),
    (54, 12_f64, 7.3230581218022335479e-17_f64),
    (54, 20_f64, 1.242547831744879908e-26_f64),
    (55, 0.05_f64, 9.6030352932283617199e-1_f64),
    (55, 0.5_f64, 6.190697393425839269e-1_f64),
    (55, 1_f64, 3.2168991772052805347e-1_f64),
    (55, 2_f64, 5.0448221962228769227e-2_f64),
    (55, 3.5_f64, 9.3038861397776015172e-4_f64),
    (55, 5_f64, 6.1933666989836125482e-6_f64),
    (55, 8_f64, 8.7211722185954872956e-11_f64),
    (55, 12_f64, 5.4787273907502641862e-17_f64),
    (55, 20_f64, 6.6279522388818705151e-27_f64),
    (56, 0.05_f64, 9.6030030223413248605e-1_f64),
    (56, 0.5_f64, 6.1903422193574727682e-1_f64),
    (56, 1_f64, 3.2161206678494564865e-1_f64),
    (56, 2_f64, 5.0359214488242854001e-2_f64),
    (56, 3.5_f64, 9.2030694044667130407e-4_f64),
    (56, 5_f64, 5.9899551481400917609e-6_f64),
    (56, 8_f64, 7.7315795836289017115e-11_f64),
    (56, 12_f64, 4.1190731784940857004e-17_f64),
    (56, 20_f64, 3.5609562117628021608e-27_f64),
    (57, 0.05_f64, 9.6029718811021797086e-1_f64),
    (57, 0.5_f64, 6.1899994720495795296e-1_f64),
    (57, 1_f64, 3.2153693526426722532e-1_f64),
    (57, 2_f64, 5.0273351053795345023e-2_f64),
    (57, 3.5_f64, 9.1064232104666752807e-4_f64),
    (57, 5_f64, 5.7986247371937181698e-6_f64),
    (57, 8_f64, 6.8725480324837307167e-11_f64),
    (57, 12_f64, 3.1116613593450787928e-17_f64),
    (57, 20_f64, 1.9266587821698242455e-27_f64),
    (58, 0.05_f64, 9.6029418112189432048e-1_f64),
    (58, 0.5_f64, 6.1896685105663692934e-1_f64),
    (58, 1_f64, 3.2146438312081528762e-1_f64),
    (58, 2_f64, 5.0190468041448340083e-2_f64),
    (58, 3.5_f64, 9.0136987516026776628e-4_f64),
    (58, 5_f64, 5.6184206972654504869e-6_f64),
    (58, 8_f64, 6.1246915642388603505e-11_f64),
    (58, 12_f64, 2.3615708349395232754e-17_f64),
    (58, 20_f64, 1.0496061746317453904e-27_f64),
    (59, 0.05_f64, 9.6029127583422548634e-1_f64),
    (59, 0.5_f64, 6.189348737301969555e-1_f64),
    (59, 1_f64, 3.2139427976944490851e-1_f64),
    (59, 2_f64, 5.0110412988244368579e-2_f64),
    (59, 3.5_f64, 8.9246663458419413108e-4_f64),
    (59, 5_f64, 5.4484806636948077964e-6_f64),
    (59, 8_f64, 5.4717982177827919191e-11_f64),
    (59, 12_f64, 1.8004065386783141356e-17_f64),
    (59, 20_f64, 5.7566030210590538009e-28_f64),
    (60, 0.05_f64, 9.6028846717376071174e-1_f64),
    (60, 0.5_f64, 6.1890395943798310255e-1_f64),
    (60, 1_f64, 3.213265032932461485e-1_f64),
    (60, 2_f64, 5.0033043651457448828e-2_f64),
    (60, 3.5_f64, 8.8391136533292465574e-4_f64),
    (60, 5_f64, 5.2880242106742773241e-6_f64),
    (60, 8_f64, 4.9002651479502034395e-11_f64),
    (60, 12_f64, 1.3786322641817738458e-17_f64),
    (60, 20_f64, 3.1780577023397202193e-28_f64),
    (61, 0.05_f64, 9.6028575039897383101e-1_f64),
    (61, 0.5_f64, 6.1887405604052883424e-1_f64),
    (61, 1_f64, 3.2126093973605941453e-1_f64),
    (61, 2_f64, 4.9958227166660495471e-2_f64),
    (61, 3.5_f64, 8.7568440881814728257e-4_f64),
    (61, 5_f64, 5.136343733342967089e-6_f64),
    (61, 8_f64, 4.3986418467628270088e-11_f64),
    (61, 12_f64, 1.0601904794561107649e-17_f64),
    (61, 20_f64, 1.7658439835119551237e-28_f64),
    (62, 0.05_f64, 9.6028312107355657612e-1_f64),
    (62, 0.5_f64, 6.1884511475315161895e-1_f64),
    (62, 1_f64, 3.2119748246316819837e-1_f64),
    (62, 2_f64, 4.9885839287642726121e-2_f64),
    (62, 3.5_f64, 8.6776754000886441992e-4_f64),
    (62, 5_f64, 4.992796484042842419e-6_f64),
    (62, 8_f64, 3.9572594258270916188e-11_f64),
    (62, 12_f64, 8.1870655865228380602e-18_f64),
    (62, 20_f64, 9.8736900937285549097e-29_f64),
    (63, 0.05_f64, 9.6028057504224952414e-1_f64),
    (63, 0.5_f64, 6.1881708988041556326e-1_f64),
    (63, 1_f64, 3.2113603158262559454e-1_f64),
    (63, 2_f64, 4.9815763699044805667e-2_f64),
    (63, 3.5_f64, 8.6014384050722345691e-4_f64),
    (63, 5_f64, 4.8567975998791944413e-6_f64),
    (63, 8_f64, 3.5679286547882801768e-11_f64),
    (63, 12_f64, 6.3479675436790725687e-18_f64),
    (63, 20_f64, 5.555035114656371297e-29_f64),
    (64, 0.05_f64, 9.6027810840893377149e-1_f64),
    (64, 0.5_f64, 6.1878993857542141245e-1_f64),
    (64, 1_f64, 3.210764934206100425e-1_f64),
    (64, 2_f64, 4.9747891393725307994e-2_f64),
    (64, 3.5_f64, 8.5279758475537933824e-4_f64),
    (64, 5_f64, 4.7278139839637519879e-6_f64),
    (64, 8_f64, 3.2236931396957516599e-11_f64),
    (64, 12_f64, 4.9414919130779732546e-18_f64),
    (64, 20_f64, 3.1442691715432229972e-29_f64),
    (65, 0.05_f64, 9.6027571751674042397e-1_f64),
    (65, 0.5_f64, 6.1876362062125735798e-1_f64),
    (65, 1_f64, 3.2101878004501529457e-1_f64),
    (65, 2_f64, 4.9682120107858718772e-2_f64),
    (65, 3.5_f64, 8.4571413782709144536e-4_f64),
    (65, 5_f64, 4.6053589237099656969e-6_f64),
    (65, 8_f64, 2.9186268849798709504e-11_f64),
    (65, 12_f64, 3.8614908900564512611e-18_f64),
    (65, 20_f64, 1.7902985451542780455e-29_f64),
    (66, 0.05_f64, 9.6027339892996436839e-1_f64),
    (66, 0.5_f64, 6.1873809823226644784e-1_f64),
    (66, 1_f64, 3.2096280883217921914e-1_f64),
    (66, 2_f64, 4.9618353807616844789e-2_f64),
    (66, 3.5_f64, 8.3887986346111155014e-4_f64),
    (66, 5_f64, 4.4889873470638437828e-6_f64),
    (66, 8_f64, 2.647667709049668307e-11_f64),
    (66, 12_f64, 3.0288908913639345097e-18_f64),
    (66, 20_f64, 1.025304796065268961e-29_f64),
    (67, 0.05_f64, 9.6027114941759423119e-1_f64),
    (67, 0.5_f64, 6.1871333587306556587e-1_f64),
    (67, 1_f64, 3.2090850207226205368e-1_f64),
    (67, 2_f64, 4.9556502222022347013e-2_f64),
    (67, 3.5_f64, 8.3228204116733657428e-4_f64),
    (67, 5_f64, 4.3782916322101899375e-6_f64),
    (67, 8_f64, 2.4064797236351893556e-11_f64),
    (67, 12_f64, 2.3845344098262457575e-18_f64),
    (67, 20_f64, 5.905448717034542197e-30_f64),
    (68, 0.05_f64, 9.6026896593829250986e-1_f64),
    (68, 0.5_f64, 6.1868930009349326365e-1_f64),
    (68, 1_f64, 3.2085578660931083323e-1_f64),
    (68, 2_f64, 4.9496480417202109288e-2_f64),
    (68, 3.5_f64, 8.2590879138581709286e-4_f64),
    (68, 5_f64, 4.2728978985950343191e-6_f64),
    (68, 8_f64, 2.1913394524284433763e-11_f64),
    (68, 12_f64, 1.8839787666957097663e-18_f64),
    (68, 20_f64, 3.4204036128405714184e-30_f64),
    (69, 0.05_f64, 9.6026684562667906943e-1_f64),
    (69, 0.5_f64, 6.1866595937787452134e-1_f64),
    (69, 1_f64, 3.2080459351250447334e-1_f64),
    (69, 2_f64, 4.943820840782351852e-2_f64),
    (69, 3.5_f64, 8.197490078068797734e-4_f64),
    (69, 5_f64, 4.1724627174581304906e-6_f64),
    (69, 8_f64, 1.9990412400779852999e-11_f64),
    (69, 12_f64, 1.493699790259120945e-18_f64),
    (69, 20_f64, 1.9919571883822814476e-30_f64),
    (70, 0.05_f64, 9.6026478578078793872e-1_f64),
    (70, 0.5_f64, 6.1864328400717427321e-1_f64),
    (70, 1_f64, 3.2075485777547310804e-1_f64),
    (70, 2_f64, 4.9381610801980449645e-2_f64),
    (70, 3.5_f64, 8.1379229607104436838e-4_f64),
    (70, 5_f64, 4.0766701888068758668e-6_f64),
    (70, 8_f64, 1.8268184528593239656e-11_f64),
    (70, 12_f64, 1.1883087788518660085e-18_f64),
    (70, 20_f64, 1.1663151279069685065e-30_f64),
    (71, 0.05_f64, 9.6026278385058196563e-1_f64),
    (71, 0.5_f64, 6.1862124593277205737e-1_f64),
    (71, 1_f64, 3.2070651804093400157e-1_f64),
    (71, 2_f64, 4.9326616476217941977e-2_f64),
    (71, 3.5_f64, 8.0802891816276951262e-4_f64),
    (71, 5_f64, 3.9852293391565680998e-6_f64),
    (71, 8_f64, 1.672277646961601813e-11_f64),
    (71, 12_f64, 9.485035599678033416e-19_f64),
    (71, 20_f64, 6.8650154763061634642e-31_f64),
    (72, 0.05_f64, 9.6026083742742269147e-1_f64),
    (72, 0.5_f64, 6.1859981866073065747e-1_f64),
    (72, 1_f64, 3.2065951634819164144e-1_f64),
    (72, 2_f64, 4.9273158277753794206e-2_f64),
    (72, 3.5_f64, 8.0244974189458688902e-4_f64),
    (72, 5_f64, 3.8978718006343488649e-6_f64),
    (72, 8_f64, 1.5333434174565379066e-11_f64),
    (72, 12_f64, 7.5955370924283773487e-19_f64),
    (72, 20_f64, 4.0617629984482225736e-31_f64),
    (73, 0.05_f64, 9.6025894423440402946e-1_f64),
    (73, 0.5_f64, 6.1857897714555483051e-1_f64),
    (73, 1_f64, 3.2061379790131740712e-1_f64),
    (73, 2_f64, 4.9221172751278869602e-2_f64),
    (73, 3.5_f64, 7.9704619494976116851e-4_f64),
    (73, 5_f64, 3.8143497373788066789e-6_f64),
    (73, 8_f64, 1.4082120701241945311e-11_f64),
    (73, 12_f64, 6.1017610771270668892e-19_f64),
    (73, 20_f64, 2.4154278859700820251e-31_f64),
    (74, 0.05_f64, 9.6025710211746819585e-1_f64),
    (74, 0.5_f64, 6.185586976925444906e-1_f64),
    (74, 1_f64, 3.2056931085605954339e-1_f64),
    (74, 2_f64, 4.9170599888001982518e-2_f64),
    (74, 3.5_f64, 7.918102230138265789e-4_f64),
    (74, 5_f64, 3.7344339897152417936e-6_f64),
    (74, 8_f64, 1.2953126022578810543e-11_f64),
    (74, 12_f64, 4.9169692931879683678e-19_f64),
    (74, 20_f64, 1.4435778179810482864e-31_f64),
    (75, 0.05_f64, 9.6025530903723102378e-1_f64),
    (75, 0.5_f64, 6.1853895786794203122e-1_f64),
    (75, 1_f64, 3.205260061237413614e-1_f64),
    (75, 2_f64, 4.9121382894855112901e-2_f64),
    (75, 3.5_f64, 7.8673425157953583567e-4_f64),
    (75, 5_f64, 3.6579124104731671289e-6_f64),
    (75, 8_f64, 1.1932737551458710061e-11_f64),
    (75, 12_f64, 3.9742466722720027839e-19_f64),
    (75, 20_f64, 8.6699039687745370462e-32_f64),
    (76, 0.05_f64, 9.6025356306145144577e-1_f64),
    (76, 0.5_f64, 6.1851973641615752048e-1_f64),
    (76, 1_f64, 3.2048383719058833373e-1_f64),
    (76, 2_f64, 4.907346798199488172e-2_f64),
    (76, 3.5_f64, 7.8181115105704344034e-4_f64),
    (76, 5_f64, 3.5845883711415474204e-6_f64),
    (76, 8_f64, 1.1008961240244936304e-11_f64),
    (76, 12_f64, 3.2217927017749317009e-19_f64),
    (76, 20_f64, 5.2321329689679265579e-32_f64),
    (77, 0.05_f64, 9.6025186235808669337e-1_f64),
    (77, 0.5_f64, 6.1850101318342975375e-1_f64),
    (77, 1_f64, 3.2044275995108620625e-1_f64),
    (77, 2_f64, 4.9026804166930584566e-2_f64),
    (77, 3.5_f64, 7.7703420486249113592e-4_f64),
    (77, 5_f64, 3.5142794184149325909e-6_f64),
    (77, 8_f64, 1.0171284918054749766e-11_f64),
    (77, 12_f64, 2.6193720593054288502e-19_f64),
    (77, 20_f64, 3.1724672521233339743e-32_f64),
    (78, 0.05_f64, 9.6025020518888074622e-1_f64),
    (78, 0.5_f64, 6.1848276904734685012e-1_f64),
    (78, 1_f64, 3.2040273255411514013e-1_f64),
    (78, 2_f64, 4.8981343093780943924e-2_f64),
    (78, 3.5_f64, 7.7239708019438290237e-4_f64),
    (78, 5_f64, 3.4468160641420604314e-6_f64),
    (78, 8_f64, 9.4104769936454357848e-12_f64),
    (78, 12_f64, 2.1356293925502526613e-19_f64),
    (78, 20_f64, 1.9325641435165674333e-32_f64),
    (79, 0.05_f64, 9.602485899034388664e-1_f64),
    (79, 0.5_f64, 6.1846498585170831228e-1_f64),
    (79, 1_f64, 3.2036371526073156278e-1_f64),
    (79, 2_f64, 4.8937038866313959684e-2_f64),
    (79, 3.5_f64, 7.6789380123892390891e-4_f64),
    (79, 5_f64, 3.3820406938079289986e-6_f64),
    (79, 8_f64, 8.7184148439607857297e-12_f64),
    (79, 12_f64, 1.7460506453968516697e-19_f64),
    (79, 20_f64, 1.1826454357442687936e-32_f64),
    (80, 0.05_f64, 9.6024701493374576136e-1_f64),
    (80, 0.5_f64, 6.1844764634626216618e-1_f64),
    (80, 1_f64, 3.2032567031258186961e-1_f64),
    (80, 2_f64, 4.8893847893559275437e-2_f64),
    (80, 3.5_f64, 7.6351872457344446497e-4_f64),
    (80, 5_f64, 3.3198065805112702162e-6_f64),
    (80, 8_f64, 8.0879381813945819289e-12_f64),
    (80, 12_f64, 1.4314098824308225456e-19_f64),
    (80, 20_f64, 7.2698506641415582196e-33_f64),
    (81, 0.05_f64, 9.6024547878908910497e-1_f64),
    (81, 0.5_f64, 6.1843073413089676134e-1_f64),
    (81, 1_f64, 3.2028856181003212595e-1_f64),
    (81, 2_f64, 4.8851728746902462557e-2_f64),
    (81, 3.5_f64, 7.5926651656164282524e-4_f64),
    (81, 5_f64, 3.2599769929842284181e-6_f64),
    (81, 8_f64, 7.5127234891476665397e-12_f64),
    (81, 12_f64, 1.1765819751383210354e-19_f64),
    (81, 20_f64, 4.4886322014773556714e-33_f64),
    (82, 0.05_f64, 9.6024398005135387301e-1_f64),
    (82, 0.5_f64, 6.1841423360390774328e-1_f64),
    (82, 1_f64, 3.2025235559918698474e-1_f64),
    (82, 2_f64, 4.8810642027677396441e-2_f64),
    (82, 3.5_f64, 7.5513213255609401854e-4_f64),
    (82, 5_f64, 3.2024243875756037828e-6_f64),
    (82, 8_f64, 6.9871762675230445565e-12_f64),
    (82, 12_f64, 9.6963195285538400173e-20_f64),
    (82, 20_f64, 2.7834814602156844747e-33_f64),
    (83, 0.05_f64, 9.6024251737065627316e-1_f64),
    (83, 0.5_f64, 6.1839812991399721123e-1_f64),
    (83, 1_f64, 3.2021701916705047488e-1_f64),
    (83, 2_f64, 4.8770550244368056146e-2_f64),
    (83, 3.5_f64, 7.5111079774265878384e-4_f64),
    (83, 5_f64, 3.1470296753134353717e-6_f64),
    (83, 8_f64, 6.5063383716518689776e-12_f64),
    (83, 12_f64, 8.0111427967579977458e-20_f64),
    (83, 20_f64, 1.7334744288843080021e-33_f64),
    (84, 0.05_f64, 9.6024108946128901786e-1_f64),
    (84, 0.5_f64, 6.1838240891569467283e-1_f64),
    (84, 1_f64, 3.2018252154415226927e-1_f64),
    (84, 2_f64, 4.8731417698616007111e-2_f64),
    (84, 3.5_f64, 7.4719798947840835545e-4_f64),
    (84, 5_f64, 3.0936815562025024559e-6_f64),
    (84, 8_f64, 6.0658081646320078582e-12_f64),
    (84, 12_f64, 6.6353194824978631126e-20_f64),
    (84, 20_f64, 1.0841045231076183501e-33_f64),
    (85, 0.05_f64, 9.6023969509795234291e-1_f64),
    (85, 0.5_f64, 6.1836705712791856189e-1_f64),
    (85, 1_f64, 3.2014883321402650676e-1_f64),
    (85, 2_f64, 4.8693210379305733565e-2_f64),
    (85, 3.5_f64, 7.4338942098973420714e-4_f64),
    (85, 5_f64, 3.0422759138191644114e-6_f64),
    (85, 8_f64, 5.6616715767947181634e-12_f64),
    (85, 12_f64, 5.5091763914263736339e-20_f64),
    (85, 20_f64, 6.8080082315634187852e-34_f64),
    (86, 0.05_f64, 9.6023833311224755165e-1_f64),
    (86, 0.5_f64, 6.1835206169542319451e-1_f64),
    (86, 1_f64, 3.2011592602898708505e-1_f64),
    (86, 2_f64, 4.8655895864067924852e-2_f64),
    (86, 3.5_f64, 7.3968102631067624976e-4_f64),
    (86, 5_f64, 2.9927152640582341119e-6_f64),
    (86, 8_f64, 5.2904424658178444441e-12_f64),
    (86, 12_f64, 4.5850840960618709374e-20_f64),
    (86, 20_f64, 4.292749249681368803e-34_f64),
    (87, 0.05_f64, 9.6023700238941199635e-1_f64),
    (87, 0.5_f64, 6.1833741035289945239e-1_f64),
    (87, 1_f64, 3.2008377313169432291e-1_f64),
    (87, 2_f64, 4.8619443227601706967e-2_f64),
    (87, 3.5_f64, 7.3606894635338553201e-4_f64),
    (87, 5_f64, 2.9449082525799510773e-6_f64),
    (87, 8_f64, 4.949010925006893993e-12_f64),
    (87, 12_f64, 3.8249227084610407586e-20_f64),
    (87, 20_f64, 2.7176251643923540561e-34_f64),
    (88, 0.05_f64, 9.6023570186527632248e-1_f64),
    (88, 0.5_f64, 6.1832309139151850624e-1_f64),
    (88, 1_f64, 3.2005234888205367192e-1_f64),
    (88, 2_f64, 4.8583822956271450696e-2_f64),
    (88, 3.5_f64, 7.3254951601321785865e-4_f64),
    (88, 5_f64, 2.8987691961129530432e-6_f64),
    (88, 8_f64, 4.6345983974476642754e-12_f64),
    (88, 12_f64, 3.1981018944730605978e-20_f64),
    (88, 20_f64, 1.7272488842669029895e-34_f64),
    (89, 0.05_f64, 9.6023443052342652219e-1_f64),
    (89, 0.5_f64, 6.1830909362772679396e-1_f64),
    (89, 1_f64, 3.2002162878902832469e-1_f64),
    (89, 2_f64, 4.8549006868482884917e-2_f64),
    (89, 3.5_f64, 7.2911925222038896768e-4_f64),
    (89, 5_f64, 2.8542176633028632736e-6_f64),
    (89, 8_f64, 4.3447186293514159578e-12_f64),
    (89, 12_f64, 2.6800094765207557306e-20_f64),
    (89, 20_f64, 1.1020594730425449202e-34_f64),
    (90, 0.05_f64, 9.6023318739255489224e-1_f64),
    (90, 0.5_f64, 6.1829540637411748341e-1_f64),
    (90, 1_f64, 3.1999158944698462767e-1_f64),
    (90, 2_f64, 4.8514968040387415525e-2_f64),
    (90, 3.5_f64, 7.2577484285854579124e-4_f64),
    (90, 5_f64, 2.8111780912655019511e-6_f64),
    (90, 8_f64, 4.0771436428368127123e-12_f64),
    (90, 12_f64, 2.2507924338433279866e-20_f64),
    (90, 20_f64, 7.0585248685774288682e-35_f64),
    (91, 0.05_f64, 9.6023197154398538794e-1_f64),
    (91, 0.5_f64, 6.1828201941221898579e-1_f64),
    (91, 1_f64, 3.1996220847622261378e-1_f64),
    (91, 2_f64, 4.8481680736503339932e-2_f64),
    (91, 3.5_f64, 7.2251313647814022824e-4_f64),
    (91, 5_f64, 2.7695794344171913018e-6_f64),
    (91, 8_f64, 3.8298740315776519942e-12_f64),
    (91, 12_f64, 1.8943964412989266156e-20_f64),
    (91, 20_f64, 4.537914993518516639e-35_f64),
    (92, 0.05_f64, 9.6023078208936012395e-1_f64),
    (92, 0.5_f64, 6.1826892296705492331e-1_f64),
    (92, 1_f64, 3.1993346446737411791e-1_f64),
    (92, 2_f64, 4.844912034487853199e-2_f64),
    (92, 3.5_f64, 7.1933113273923511554e-4_f64),
    (92, 5_f64, 2.7293548425193756619e-6_f64),
    (92, 8_f64, 3.6011129862468921079e-12_f64),
    (92, 12_f64, 1.5978070677641347308e-20_f64),
    (92, 20_f64, 2.9282458715287777965e-35_f64),
    (93, 0.05_f64, 9.6022961817847491099e-1_f64),
    (93, 0.5_f64, 6.1825610768334245669e-1_f64),
    (93, 1_f64, 3.1990533692937817683e-1_f64),
    (93, 2_f64, 4.8417263316451573409e-2_f64),
    (93, 3.5_f64, 7.1622597352441706202e-4_f64),
    (93, 5_f64, 2.6904413651970377581e-6_f64),
    (93, 8_f64, 3.3892435438317083164e-12_f64),
    (93, 12_f64, 1.3504487046331856014e-20_f64),
    (93, 20_f64, 1.8964586086691533046e-35_f64),
    (94, 0.05_f64, 9.6022847899725274654e-1_f64),
    (94, 0.5_f64, 6.182435646032071849e-1_f64),
    (94, 1_f64, 3.1987780624076805331e-1_f64),
    (94, 2_f64, 4.8386087108297597246e-2_f64),
    (94, 3.5_f64, 7.1319493466791664404e-4_f64),
    (94, 5_f64, 2.6527796804755260484e-6_f64),
    (94, 8_f64, 3.1928086284157184662e-12_f64),
    (94, 12_f64, 1.1437071998763792164e-20_f64),
    (94, 20_f64, 1.232651403288114026e-35_f64),
    (95, 0.05_f64, 9.6022736376584510964e-1_f64),
    (95, 0.5_f64, 6.1823128514530306666e-1_f64),
    (95, 1_f64, 3.1985085360402653409e-1_f64),
    (95, 2_f64, 4.8355570130471614983e-2_f64),
    (95, 3.5_f64, 7.1023541825191256816e-4_f64),
    (95, 5_f64, 2.6163138451330517819e-6_f64),
    (95, 8_f64, 3.0104935131762516672e-12_f64),
    (95, 12_f64, 9.7054977136773978234e-21_f64),
    (95, 20_f64, 8.0403551885463526907e-36_f64),
    (96, 0.05_f64, 9.6022627173685175406e-1_f64),
    (96, 0.5_f64, 6.1821926108523509317e-1_f64),
    (96, 1_f64, 3.1982446100278637591e-1_f64),
    (96, 2_f64, 4.8325691696186112275e-2_f64),
    (96, 3.5_f64, 7.0734494542538376313e-4_f64),
    (96, 5_f64, 2.5809910648902825179e-6_f64),
    (96, 8_f64, 2.8411103859872878518e-12_f64),
    (96, 12_f64, 8.2522161854766295573e-21_f64),
    (96, 20_f64, 5.262907681510981165e-36_f64),
    (97, 0.05_f64, 9.6022520219365046102e-1_f64),
    (97, 0.5_f64, 6.1820748453719086111e-1_f64),
    (97, 1_f64, 3.1979861116167112653e-1_f64),
    (97, 2_f64, 4.8296431975081476965e-2_f64),
    (97, 3.5_f64, 7.0452114970482561051e-4_f64),
    (97, 5_f64, 2.5467614826576318736e-6_f64),
    (97, 8_f64, 2.6835847456924188551e-12_f64),
    (97, 12_f64, 7.0300316091207778681e-21_f64),
    (97, 20_f64, 3.4567648775928025536e-36_f64),
    (98, 0.05_f64, 9.6022415444882890816e-1_f64),
    (98, 0.5_f64, 6.1819594793669484341e-1_f64),
    (98, 1_f64, 3.197732875085882198e-1_f64),
    (98, 2_f64, 4.8267771949367595425e-2_f64),
    (98, 3.5_f64, 7.0176177071971091875e-4_f64),
    (98, 5_f64, 2.5135779832380462442e-6_f64),
    (98, 8_f64, 2.5369433940940789563e-12_f64),
    (98, 12_f64, 6.0001532018378280086e-21_f64),
    (98, 20_f64, 2.2781693677341112501e-36_f64),
    (99, 0.05_f64, 9.6022312784271144474e-1_f64),
    (99, 0.5_f64, 6.1818464402440610899e-1_f64),
    (99, 1_f64, 3.1974847413930140376e-1_f64),
    (99, 2_f64, 4.8239693372632922738e-2_f64),
    (99, 3.5_f64, 6.990646483687944769e-4_f64),
    (99, 5_f64, 2.4813960130409478239e-6_f64),
    (99, 8_f64, 2.4003038210568683005e-12_f64),
    (99, 12_f64, 5.1306296878974854698e-21_f64),
    (99, 20_f64, 1.5064448594601807613e-36_f64),
    (100, 0.05_f64, 9.6022212174197413881e-1_f64),
    (100, 0.5_f64, 6.1817356583088657198e-1_f64),
    (100, 1_f64, 3.197241557841233604e-1_f64),
    (100, 2_f64, 4.8212178731133679601e-2_f64),
    (100, 3.5_f64, 6.9642771735626891986e-4_f64),
    (100, 5_f64, 2.450173413503800423e-6_f64),
    (100, 8_f64, 2.2728648077280806474e-12_f64),
    (100, 12_f64, 4.3950877156043781452e-21_f64),
    (100, 20_f64, 9.9942678613369559334e-37_f64),
];
