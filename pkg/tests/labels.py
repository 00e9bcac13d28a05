"""Every labelled lemma and theorem of the source development, in order."""

LABELS = """
    lemma:ordered_pair_equality lemma:singleton1 lemma:single_oneone lemma:Ap lemma:finverse
    lemma:sim lemma:similar_to_empty2 lemma:finitedecidable lemma:empty_or_inhabited
    lemma:markov lemma:lambda_finite lemma:finite_adjoin lemma:finite_structure
    lemma:singletons_finite lemma:uscfinite lemma:union lemma:similar_decidable
    lemma:similarityrestricted lemma:finitesimilar lemma:finitepowerset
    lemma:finiteseparable lemma:separablefinite lemma:finitedif lemma:boundedquantification
    lemma:swap_similarity theorem:infiniteimpliesnotfinite lemma:finiteunion
    lemma:ssc_adjoin lemma:intersectionseparable lemma:finiteDNS lemma:notnotseparable
    lemma:union2 lemma:finitecardinals1 lemma:induction lemma:cardinalsinhabited
    lemma:finitecardinals0 lemma:finitecardinals2 lemma:xinNcx lemma:cardinalequality
    lemma:Ncsuccessor lemma:Nc_empty lemma:successorinhabited lemma:Fregesuccessoromits0
    lemma:nonzeroissuccessor lemma:zeroF lemma:successorF lemma:oneF lemma:finitecardinals3
    lemma:Finhabited lemma:similar_to_finite lemma:separable_similarity
    lemma:similarity_image lemma:le_transitive lemma:cardinalsdisjoint lemma:lessthan2
    lemma:le2 lemma:cardinalpredecessor lemma:ordersuccessor lemma:successoroneone
    lemma:strictordersuccessor lemma:difference_nonempty lemma:successorstrict
    lemma:zero_or_not_zero theorem:finitetrichotomy lemma:FregeNdecidable lemma:le_reflexive
    lemma:letolessthan lemma:finitetrichotomy2 lemma:le_transitive2 lemma:le_transitive3
    lemma:lessthan_transitive lemma:lessthansuccessor lemma:successorincreasing
    lemma:xnotlessthanx lemma:xnotlessthanzero lemma:noinsertions lemma:successorbounded
    lemma:lessthansuccessor2 lemma:lessthansuccessor3 lemma:nothinglessthanzero
    lemma:finitemaximal lemma:xnotequalsuccessorx lemma:xlessthansuccessorx lemma:subset_usc
    lemma:sscusc lemma:singletons_similar lemma:similar_to_singleton lemma:one_members
    lemma:usc_subset3 lemma:uscsimilar lemma:sscsimilar lemma:usc_subset_ssc
    lemma:usc_subset lemma:ssc_subset1 lemma:ssc_subset2 lemma:ssc_subset4 lemma:ssc_subset3
    lemma:usc_successor lemma:usc_dif2 lemma:usc_empty lemma:usc_up_down lemma:ssc_empty
    lemma:similarinhabited lemma:boundedDNS lemma:expuscssc lemma:expdefinable
    lemma:exp_inhabited lemma:finiteexp lemma:exp_zero lemma:exp_one lemma:exp_two
    lemma:two_members lemma:three_members lemma:smallarith lemma:lessthanone
    lemma:lessthantwo lemma:usc_unitclass lemma:le_zero lemma:mlessthanexpm
    lemma:mplusone_le_expm lemma:exporder lemma:addition2 lemma:addition3
    lemma:successorisplusone lemma:oneplusone lemma:inhabited_sum lemma:subterms
    lemma:subterms2 lemma:subterms3 lemma:addorder lemma:addorder2 lemma:exp_members2
    lemma:expnotzero lemma:extend_similar lemma:cardinality_additive lemma:subtraction
    lemma:ssc_adjoin2 lemma:exprec lemma:exponeonebase lemma:exponeone lemma:exporderstrict
    lemma:orderbyaddition lemma:successorSF lemma:FsubsetSF lemma:zero_or_successor
    lemma:additionSF lemma:multiplication1 lemma:multiplication2 lemma:multiplicationSF
    lemma:zero_or_successorG lemma:addstozero lemma:multiplication3helper
    lemma:multiplication3 lemma:inhabitedSF lemma:successorSFF lemma:multiplication4
    lemma:mul_zeroNF lemma:zero_mulNF lemma:multhelper lemma:multhelper2
    lemma:multiplication5 theorem:multiplication lemma:right_distributiveNF
    lemma:left_distributiveNF lemma:one_mulNF lemma:multiplication_commutative
    lemma:subtractionF lemma:assoc_helper lemma:multiplication_associative lemma:mul_oneNF
    lemma:twoequalsoneplusone lemma:timestwo lemma:xlessthan_xplusy lemma:exp_sum
    lemma:Tmembers lemma:T lemma:Ncdef lemma:SpeckerT lemma:Tfinite lemma:Nc_unitclass
    lemma:Tsuccessor lemma:Tzero lemma:Tone lemma:Ttwo lemma:Torder lemma:Tsum
    lemma:expT_inhabited lemma:expTinF lemma:successorT lemma:expT lemma:Toneone
    lemma:fivepointthree_converse lemma:Tlessthan lemma:Tonto lemma:Tinexp lemma:epluse
    lemma:Teven lemma:adds_to_zero lemma:dividebytwo lemma:expandT
    lemma:productfinite_helper lemma:productfinite lemma:finitefunction
    lemma:decidable_preimage theorem:dedekind1 lemma:adjoin_cardinality lemma:nothingbetween
    lemma:separableNc theorem:dedekind2 lemma:Jsuccessor lemma:Jfinite lemma:Jcardinality
""".split()
